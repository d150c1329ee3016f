"""
Configuration module for the Alpha-Unit Toolkit.
"""

from config.settings import settings, print_settings

__all__ = ["settings", "print_settings"]
