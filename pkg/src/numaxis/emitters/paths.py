"""Output-path checks shared by the emitters."""

from __future__ import annotations

import os
from collections.abc import Sequence
from pathlib import Path

from numaxis.errors import ArgumentError, OutputError


def validate_output_path(path: str | os.PathLike[str], *, allowed_suffixes: Sequence[str] | None = None) -> Path:
    """Validate and normalize an output file path.

    The path is normalized (`.` and duplicate separators removed, `~`
    expanded). Its parent directory must already exist; nothing is created.

    Args:
        path: Where the artifact will be written.
        allowed_suffixes: Optional list of accepted suffixes (e.g. `[".csv"]`),
            compared case-insensitively.

    Returns:
        The normalized path.

    Raises:
        ArgumentError: If the path is empty or has a suffix not in
            `allowed_suffixes`.
        OutputError: If the parent directory is missing or the path names an
            existing directory.

    Example:
        ```python
        validate_output_path("out//fig1.svg", allowed_suffixes=[".svg"])  # Path("out/fig1.svg")
        validate_output_path("fig1.png", allowed_suffixes=[".svg", ".csv"])  # Raises ArgumentError
        validate_output_path("/no/such/dir/fig1.csv")  # Raises OutputError
        ```
    """
    text = os.fspath(path)
    if not text.strip():
        msg = "output path must not be empty"
        raise ArgumentError(msg)

    normalized = Path(os.path.normpath(os.path.expanduser(text)))

    if allowed_suffixes is not None and normalized.suffix.lower() not in {s.lower() for s in allowed_suffixes}:
        allowed = ", ".join(allowed_suffixes)
        msg = f"unsupported output type {normalized.suffix or '(none)'!r} for {text}; expected one of: {allowed}"
        raise ArgumentError(msg)

    if normalized.is_dir():
        msg = f"output path is a directory: {text}"
        raise OutputError(msg)

    parent = normalized.parent
    if not parent.is_dir():
        msg = f"output directory does not exist: {parent}"
        raise OutputError(msg)

    return normalized
