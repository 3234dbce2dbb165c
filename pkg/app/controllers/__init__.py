"""Controllers package."""

