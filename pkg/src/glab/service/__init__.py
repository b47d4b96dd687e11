from .app import create_app
from .state import BallCache

__all__ = ["BallCache", "create_app"]
