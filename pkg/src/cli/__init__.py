"""Superfície de linha de comando: mini-linguagem de grupos e subcomandos."""

from src.cli.group_spec import GroupSpec, build_group, parse_coset_spec, parse_group_spec, render_group_spec

__all__ = ["GroupSpec", "build_group", "parse_coset_spec", "parse_group_spec", "render_group_spec"]
