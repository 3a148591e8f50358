# src/pimsim/cli/commands/schema.py

from __future__ import annotations

import json

import click

from ..outputs import SCHEMAS


@click.command()
@click.argument("name", type=click.Choice(sorted(SCHEMAS)), required=False)
def schema(name: str | None) -> None:
    """Print the JSON schema of a command's output (all of them without NAME)."""
    if name is not None:
        click.echo(json.dumps(SCHEMAS[name].model_json_schema(), indent=2))
        return
    click.echo(json.dumps({key: model.model_json_schema() for key, model in SCHEMAS.items()}, indent=2))
