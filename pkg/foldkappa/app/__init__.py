"""
Initialize the FoldKappa app module
"""
