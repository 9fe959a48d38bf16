from ultranev.cli.config import *
from ultranev.cli.fixtures import *
from ultranev.cli.report import *

__all__ = [
    'FORMATS', 'RunConfig', 'load_defaults', 'read_field',
    'Fixture', 'FixtureResult', 'fixture_names', 'load_fixture',
    'compare_fixture', 'run_fixture',
    'flatten_report', 'bundle_rows', 'render', 'render_csv', 'render_json',
    'render_pretty',
]
