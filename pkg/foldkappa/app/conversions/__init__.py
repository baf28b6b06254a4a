"""
Initialize the FoldKappa app conversions module
"""

import foldkappa.app.conversions.converter
from foldkappa.app.conversions.files import read_yaml_file
