from apps.ranking.services.ranking import CfsService

__all__ = ["CfsService"]
