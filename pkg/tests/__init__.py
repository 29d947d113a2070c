"""
Test suite for qpart

Series arithmetic, partition enumeration, diagrams, involution sweeps,
identity routes, configuration and the command line.
"""
