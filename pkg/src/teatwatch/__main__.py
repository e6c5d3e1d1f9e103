"""Allow ``python -m teatwatch``."""

from .cli import main

main()
