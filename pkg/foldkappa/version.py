"""
FoldKappa version module
"""

VERSION = '0.1.0'
