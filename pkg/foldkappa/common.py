"""
FoldKappa common module
"""

import os

foldkappa_path = os.path.abspath(os.path.dirname(os.path.dirname(__file__)))  # absolute path to the FoldKappa repository
