"""
    Rendering of reports as JSON, CSV or indented text. Every rational is
    already an exact "a/b" string when it gets here.
"""
import csv
import io
import json

from ultranev.exactnum.plfun import plf_breakpoints, plf_sample
from ultranev.util import format_rational


def flatten_report(data, prefix=''):
    """
        Nested dicts and lists as (dotted key, value) rows.
    """
    rows = []
    if isinstance(data, dict):
        for key, value in data.items():
            rows.extend(flatten_report(value, f'{prefix}{key}.'))
    elif isinstance(data, (list, tuple)):
        if not data:
            rows.append((prefix[:-1], ''))
        for index, value in enumerate(data):
            rows.extend(flatten_report(value, f'{prefix}{index}.'))
    else:
        rows.append((prefix[:-1], '' if data is None else data))
    return rows


def bundle_rows(bundle):
    """
        Plot data of a NevBundle: (function, t, value) at every breakpoint
        of every function, exact.
    """
    rows = []
    for key, function in bundle.functions().items():
        for t, value in plf_sample(function, plf_breakpoints(function)):
            rows.append((key, format_rational(t), format_rational(value)))
    return rows


def render_json(data):
    return json.dumps(data, indent=1, ensure_ascii=False)


def render_csv(rows, header=('key', 'value')):
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def render_pretty(data, indent=0):
    pad = ' ' * indent
    lines = []
    if isinstance(data, dict):
        for key, value in data.items():
            if isinstance(value, (dict, list, tuple)) and value:
                lines.append(f'{pad}{key}:')
                lines.append(render_pretty(value, indent + 2))
            else:
                lines.append(f'{pad}{key}: {_scalar(value)}')
    elif isinstance(data, (list, tuple)):
        for value in data:
            if isinstance(value, (dict, list, tuple)) and value:
                lines.append(f'{pad}-')
                lines.append(render_pretty(value, indent + 2))
            else:
                lines.append(f'{pad}- {_scalar(value)}')
    else:
        lines.append(f'{pad}{_scalar(data)}')
    return '\n'.join(lines)


def _scalar(value):
    if value is None:
        return '-'
    if isinstance(value, (list, tuple, dict)):
        return '[]' if not isinstance(value, dict) else '{}'
    return str(value)


def render(data, output, rows=None):
    """
        :param data dict: JSON-ready report
        :param output str: json, csv or pretty
        :param rows list: CSV rows replacing the flattened report
        :return: text to print
    """
    if output == 'csv':
        if rows is not None:
            return render_csv(rows, ('function', 't', 'value'))
        return render_csv(flatten_report(data))
    if output == 'pretty':
        return render_pretty(data)
    return render_json(data)
