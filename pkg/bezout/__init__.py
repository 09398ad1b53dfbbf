"""
Bezout - exact diagonal reduction over Bezout domains.

This package contains:
- Five concrete ring instances with extended-gcd witnesses
- Dense matrices with elementary-operation transcripts
- Hermite triangularization and full diagonal reduction
- Constructive certificates for stable, adequate, PM and feckly clean elements
- A batch command-line front end
"""

__version__ = "1.0.0"
