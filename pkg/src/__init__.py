"""Estatística exata de p-elementos em grupos finitos de permutações."""
