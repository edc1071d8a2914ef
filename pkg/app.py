"""
hyperjac command-line entry point
"""

import sys
import logging

from config import Config
from src.cli import main

# Configure logging
logging.basicConfig(
    level=getattr(logging, Config.LOG_LEVEL.upper(), logging.INFO),
    format=Config.LOG_FORMAT,
    handlers=[logging.StreamHandler(sys.stderr)]
)

if __name__ == "__main__":
    sys.exit(main())
