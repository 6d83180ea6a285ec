import csv
import io
import json
import math

from csecs.errors import InvalidSpec


FORMATS = ('csv', 'json')


def format_cell(value):
    """
    Renders one table cell. Floats use repr (shortest round-trip form),
    missing values are left empty.
    """
    if value is None:
        return ''
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if isinstance(value, float):
        return repr(value)
    return str(value)


def split_complex(record):
    """
    Replaces every complex value in a flat dict by <key>_re and <key>_im.
    """
    flat = {}
    for key, value in record.items():
        if isinstance(value, complex):
            flat[f'{key}_re'] = value.real
            flat[f'{key}_im'] = value.imag
        else:
            flat[key] = value
    return flat


def json_cell(value):
    if isinstance(value, float) and not math.isfinite(value):
        return None
    return value


def table_to_csv(table):
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(table.header)
    for row in table.rows:
        writer.writerow([format_cell(cell) for cell in row])
    return buffer.getvalue()


def table_to_json(table):
    payload = {
        'header': list(table.header),
        'rows': [[json_cell(cell) for cell in row] for row in table.rows]
    }
    return json.dumps(payload, indent=2) + '\n'


def render_table(table, output_format='csv'):
    if output_format == 'csv':
        return table_to_csv(table)
    if output_format == 'json':
        return table_to_json(table)
    raise InvalidSpec(f"Unknown output format '{output_format}'. Use csv or json.")
