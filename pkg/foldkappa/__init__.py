"""
Initialize the FoldKappa module
"""

from foldkappa.common import foldkappa_path
from foldkappa.version import VERSION
