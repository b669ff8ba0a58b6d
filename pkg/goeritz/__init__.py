"""
Genus-2 Goeritz group of S2 x S1: normal forms, stabilizers, Bass-Serre tree
and free-group primitivity.
"""
