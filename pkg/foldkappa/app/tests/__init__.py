"""
Initialize the FoldKappa app tests module
"""
