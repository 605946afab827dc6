from helium_resonator.config import dump_run_config
from helium_resonator.management.base import BaseModelCommand


class Command(BaseModelCommand):
    help = "Inspect the effective run configuration."

    def add_model_arguments(self, parser):
        subparsers = parser.add_subparsers(dest='action', required=True)
        subparsers.add_parser('dump', help='Write the effective config as JSON; it re-ingests to identical outputs')

    def run_model(self, config, options):
        return dump_run_config(config)
