from __future__ import annotations

import os
from contextlib import contextmanager
from pathlib import Path
from typing import Dict, Iterator, Mapping

import mlflow

from src.utils.git import get_git_sha

DEFAULT_EXPERIMENT = "quatloc/analysis"


class MLflowLogger:
    """Run tracking that stays silent unless a tracking URI is configured."""

    def __init__(self, tracking_uri: str, experiment_name: str, env: str) -> None:
        self._tracking_uri = tracking_uri
        self._experiment_name = experiment_name
        self._env = env
        if self._tracking_uri:
            mlflow.set_tracking_uri(self._tracking_uri)

    @classmethod
    def from_env(cls) -> "MLflowLogger":
        return cls(
            tracking_uri=os.getenv("MLFLOW_TRACKING_URI", ""),
            experiment_name=os.getenv("MLFLOW_EXPERIMENT_NAME", DEFAULT_EXPERIMENT),
            env=os.getenv("ENV", "local"),
        )

    @property
    def enabled(self) -> bool:
        return bool(self._tracking_uri)

    @contextmanager
    def start_run(self, run_name: str) -> Iterator[None]:
        if not self.enabled:
            yield
            return
        mlflow.set_experiment(self._experiment_name)
        # End any active run before starting a new one
        if mlflow.active_run():
            mlflow.end_run()
        with mlflow.start_run(run_name=run_name):
            mlflow.set_tags({"git_sha": get_git_sha(), "env": self._env, "verb": run_name})
            yield

    def log_params(self, params: Mapping[str, object]) -> None:
        if self.enabled and mlflow.active_run():
            mlflow.log_params({k: _param_value(v) for k, v in params.items()})

    def log_metric(self, key: str, value: float) -> None:
        if self.enabled and mlflow.active_run():
            mlflow.log_metric(key, float(value))

    def log_metrics(self, metrics: Dict[str, float]) -> None:
        for key, value in metrics.items():
            self.log_metric(key, value)

    def log_artifact(self, path: Path) -> None:
        if self.enabled and mlflow.active_run():
            mlflow.log_artifact(str(path))


def _param_value(value: object) -> object:
    # mlflow caps param values at 500 characters
    if isinstance(value, (list, tuple)):
        return ",".join(str(v) for v in value)[:500]
    return value
