"""
Initialize the FoldKappa app graphs module

Hypercube and folded hypercube topologies, vertex set calculus,
extremal neighbourhood searches, component cuts, closed forms and fault simulation.
"""
