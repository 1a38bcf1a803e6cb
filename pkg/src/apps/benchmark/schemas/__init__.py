from apps.benchmark.schemas.grid import CellResult, CVReport, Fold, GridSpec, TopMeanAccuracy

__all__ = ["CellResult", "CVReport", "Fold", "GridSpec", "TopMeanAccuracy"]
