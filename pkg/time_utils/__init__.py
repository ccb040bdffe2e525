from .time_utils import Stopwatch, format_duration

__all__ = ['Stopwatch', 'format_duration']
