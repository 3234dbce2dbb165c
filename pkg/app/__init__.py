"""Oscillator max-cut solver package."""
