"""
Configuration Package

Library and CLI configuration management using Pydantic settings.

Features:
- Environment variable loading (prefix BEZOUT_REDUCE_)
- Type validation
- Budgets for the exhaustive condition checks
"""

from bezout.config.settings import Settings, settings

__all__ = ['Settings', 'settings']
