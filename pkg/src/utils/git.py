"""Source revision attached to tracked runs."""
from __future__ import annotations

import os
import subprocess
from pathlib import Path
from typing import Optional

UNKNOWN = "unknown"
_REPO_ROOT = Path(__file__).resolve().parents[2]


def get_git_sha(root: Optional[Path] = None) -> str:
    """Short revision of the checkout, suffixed ``-dirty`` when the tree has local edits.

    ``GIT_SHA`` wins when set.
    """
    env_sha = os.getenv("GIT_SHA", "").strip()
    if env_sha:
        return env_sha
    try:
        result = subprocess.run(
            ["git", "describe", "--always", "--dirty", "--abbrev=12"],
            cwd=root or _REPO_ROOT,
            check=False,
            capture_output=True,
            text=True,
            timeout=5,
        )
    except (OSError, subprocess.TimeoutExpired):
        return UNKNOWN
    if result.returncode != 0:
        return UNKNOWN
    return result.stdout.strip() or UNKNOWN
