from app import logger

__all__ = ["logger"]
