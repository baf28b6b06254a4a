"""
Initialize the FoldKappa app core module
"""
