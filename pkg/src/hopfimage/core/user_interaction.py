import click
import logging


class UserInteraction:
    """Styled terminal messages for the command line front end."""

    @staticmethod
    def show_message(message, message_type="info", err=False):
        """ Display a styled message to the user"""
        if message_type == "info":
            click.echo(click.style(message, fg='green'), err=err)
        elif message_type == "warning":
            click.echo(click.style(message, fg='yellow'), err=err)
        elif message_type == "error":
            click.echo(click.style(message, fg='red', bold=True), err=err)
        else:
            logging.debug(f"Unknown message type '{message_type}', printing plain")
            click.echo(message, err=err)
