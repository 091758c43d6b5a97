"""Betweenness ordering by non-uniform pivot sampling."""
