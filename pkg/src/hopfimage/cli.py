import logging
import logging.config
import sys
from typing import Any, Dict, Optional

import click

from hopfimage.core.exceptions import HopfImageError
from hopfimage.core.hopfimage_config import HopfImageConfig
from hopfimage.core.profile import METHODS, OUTPUT_FORMATS
from hopfimage.core.user_interaction import UserInteraction
from .hopfimage import EXIT_FAILURE, RunConfig, run


def setup_logging(logging_config: Optional[Dict[str, Any]] = None, verbose: bool = False,
                  default_level=logging.WARNING):
    """Setup logging from the config file's ``logging:`` section, or a plain stderr handler."""
    if logging_config:
        try:
            logging.config.dictConfig(logging_config)
        except (ValueError, TypeError, AttributeError, ImportError) as e:
            logging.basicConfig(level=default_level)
            logging.warning(f"Invalid logging configuration ({e}). Using default configs.")
    else:
        logging.basicConfig(level=default_level)
    if verbose:
        logging.getLogger().setLevel(logging.DEBUG)


class CliState:
    def __init__(self, config: HopfImageConfig, profile: str, verbose: bool):
        self.config = config
        self.profile = profile
        self.verbose = verbose


def execute(ctx, command: str, cli_args: Dict[str, Any], **paths) -> None:
    """Resolves the profile, runs the command and exits with its status."""
    state: CliState = ctx.obj
    try:
        profile = state.config.update_from_cli(profile=state.profile, verbose=state.verbose or None, **cli_args)
        config = RunConfig(command=command, profile=profile, **paths)
        status = run(config)
    except HopfImageError as e:
        UserInteraction.show_message(f"Error: {e}", "error", err=True)
        ctx.exit(EXIT_FAILURE)
    except ValueError as e:
        UserInteraction.show_message(f"Invalid arguments: {e}", "error", err=True)
        ctx.exit(EXIT_FAILURE)
    ctx.exit(status)


tolerance_option = click.option('-t', '--tolerance', type=float, help='Absolute zero-test threshold eps.')
format_option = click.option('-f', '--format', 'output_format', type=click.Choice(OUTPUT_FORMATS),
                             help='Report format.')
output_option = click.option('-o', '--output', 'output_file', type=click.Path(dir_okay=False),
                             help='Write the report to this file instead of standard output.')
cap_option = click.option('--cap', type=int, help='Largest admissible n^k.')
max_level_option = click.option('--max-level', type=int, help='Largest admissible k.')
kmax_option = click.option('-k', '--kmax', 'k_max', type=int, help='Number of levels to scan.')
model_option = click.option('-m', '--model', 'model_path', type=click.Path(exists=True, dir_okay=False),
                            help='Model JSON, or a generator document (points, H, fourier, dita, U).')
oracle_option = click.option('--oracle', 'oracle_path', type=click.Path(exists=True, dir_okay=False),
                             help='Oracle JSON descriptor.')


@click.group()
@click.option('--config', 'config_path', type=click.Path(exists=True, dir_okay=False),
              help='YAML file with profiles and a logging section.')
@click.option('-p', '--profile', default='default', help='Use a predefined profile from the config.')
@click.option('-v', '--verbose', is_flag=True, help='Print detailed logs of the computation.')
@click.pass_context
def hopfimage(ctx, config_path: Optional[str], profile: str, verbose: bool):
    """
    hopfimage - inner faithfulness checks for matrix models of compact quantum groups.

    \b
    Example:
        hopfimage build-model --generator f2.json -o f2_model.json
        hopfimage certify --model f2_model.json --oracle s2.json --kmax 3
        hopfimage moments --oracle free_symmetric_n4.json --kmax 5
    """
    try:
        config = HopfImageConfig.load(config_path)
    except HopfImageError as e:
        UserInteraction.show_message(f"Configuration Error: {e}", "error", err=True)
        ctx.exit(EXIT_FAILURE)
    setup_logging(config.logging_config, verbose)
    ctx.obj = CliState(config, profile, verbose)


@hopfimage.command()
@click.pass_context
@model_option
@tolerance_option
@format_option
@output_option
def validate(ctx, model_path, tolerance, output_format, output_file):
    """Check the magic unitary (or group-dual) conditions of a model."""
    execute(ctx, 'validate', dict(tolerance=tolerance, output_format=output_format, output_file=output_file),
            model_path=model_path)


@hopfimage.command(name='build-model')
@click.pass_context
@click.option('-g', '--generator', 'generator_path', type=click.Path(exists=True, dir_okay=False), required=True,
              help='Generator document: {"n", "points"}, {"H"}, {"fourier"}, {"dita"} or {"U"}.')
@tolerance_option
@output_option
def build_model_command(ctx, generator_path, tolerance, output_file):
    """Build a model JSON from permutations, a Hadamard matrix or unitaries."""
    execute(ctx, 'build-model', dict(tolerance=tolerance, output_file=output_file),
            generator_path=generator_path)


@hopfimage.command(name='certify')
@click.pass_context
@model_option
@oracle_option
@kmax_option
@click.option('--method', type=click.Choice(METHODS), help='Eigenvalue-1 multiplicity method.')
@tolerance_option
@cap_option
@max_level_option
@format_option
@output_option
@click.option('--progress/--no-progress', default=False, help='Show a progress bar over the levels.')
def certify_command(ctx, model_path, oracle_path, k_max, method, tolerance, cap, max_level,
                    output_format, output_file, progress):
    """
    Compare m_k = #(1 ∈ T_k) with c_k = h(χ^k) for k = 1..kmax.

    Exit status 0 for ConfirmedUpTo, 2 for RefutedAt, 1 for Inconsistent or errors.
    """
    cli_args = dict(k_max=k_max, method=method, tolerance=tolerance, cap=cap, max_level=max_level,
                    output_format=output_format, output_file=output_file)
    execute(ctx, 'certify', cli_args, model_path=model_path, oracle_path=oracle_path, progress=progress)


@hopfimage.command()
@click.pass_context
@model_option
@oracle_option
@click.option('-w', '--word', 'words', multiple=True, help='A word such as "(1,1)(2,2)"; repeatable.')
@click.option('--max-length', type=int, help='Tabulate every word of length up to this.')
@click.option('--hopf-image', is_flag=True, help='Compare with the group generated by a permutation model.')
@tolerance_option
@cap_option
@max_level_option
@format_option
@output_option
def idempotent(ctx, model_path, oracle_path, words, max_length, hopf_image, tolerance, cap, max_level,
               output_format, output_file):
    """Tabulate the idempotent state of the Hopf image against an oracle's Haar state."""
    cli_args = dict(tolerance=tolerance, cap=cap, max_level=max_level,
                    output_format=output_format, output_file=output_file)
    execute(ctx, 'idempotent', cli_args, model_path=model_path, oracle_path=oracle_path,
            words=list(words), max_length=max_length, hopf_image=hopf_image)


@hopfimage.command()
@click.pass_context
@oracle_option
@kmax_option
@format_option
@output_option
def moments(ctx, oracle_path, k_max, output_format, output_file):
    """Print the moments c_k = h(χ^k) of an oracle for k = 1..kmax."""
    execute(ctx, 'moments', dict(k_max=k_max, output_format=output_format, output_file=output_file),
            oracle_path=oracle_path)


if __name__ == "__main__":
    sys.exit(hopfimage())
