"""
Initialize the FoldKappa app schemas module for Pydantic schemas
"""
