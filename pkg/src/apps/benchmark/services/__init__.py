from apps.benchmark.services.folds import make_folds
from apps.benchmark.services.benchmark import BenchmarkService, summarize_ama, summarize_tma
from apps.benchmark.services.report import (
    cells_frame,
    ranking_frame,
    render_matrix,
    render_ranking,
    render_report,
)

__all__ = [
    "make_folds",
    "BenchmarkService",
    "summarize_ama",
    "summarize_tma",
    "cells_frame",
    "ranking_frame",
    "render_matrix",
    "render_ranking",
    "render_report",
]
