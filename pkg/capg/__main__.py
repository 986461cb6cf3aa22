"""Main entry point for capg command line tool."""
import sys

from capg.cli import main

sys.exit(main(sys.argv[1:]))
