"""Emitters for numaxis results: CSV tables, SVG figures and JSON reports."""

from numaxis.emitters.paths import validate_output_path
from numaxis.emitters.report import emit_json, round_significant, to_jsonable
from numaxis.emitters.svg import emit_svg
from numaxis.emitters.tables import read_curves_csv, write_curves_csv, write_trajectory_csv

__all__ = [
    "emit_json",
    "emit_svg",
    "read_curves_csv",
    "round_significant",
    "to_jsonable",
    "validate_output_path",
    "write_curves_csv",
    "write_trajectory_csv",
]
