"""Routes package."""

