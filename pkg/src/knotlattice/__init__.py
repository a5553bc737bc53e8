"""Chessboard-surface lattices of link diagrams."""
