"""Service layer: pydantic models, request handlers, and the FastAPI app."""

from .app import app
from .models import RunOutput

__all__ = ["app", "RunOutput"]
