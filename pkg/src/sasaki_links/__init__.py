"""
Sasaki Links

Exact invariants of Brieskorn and weighted homogeneous links, and the
arithmetic of Sasakian joins built from them.
"""

__version__ = "1.0.0"

from .brieskorn_ci import build_link, link_report, link_summary
from .cli import run
from .sasaki_join import JoinSpec, join_report
from .wh_link import analyze, parse_poly

__all__ = ["build_link", "link_report", "link_summary", "JoinSpec", "join_report", "analyze", "parse_poly", "run"]
