"""
FoldKappa app conversions files module
This module is used for dumping and loading various file types
"""

import csv
import io
import json
import os
from typing import Any, Iterable, Sequence

import yaml


def read_yaml_file(path: str) -> dict or list:
    """
    Read a YAML file and return the parameters as python variables.

    Args:
        path (str): The YAML file path to read.

    Returns:
        Union[dict, list]: The content read from the file.
    """
    if not isinstance(path, str):
        raise ValueError(f'path must be a string, got {path} which is a {type(path)}')
    if not os.path.isfile(path):
        raise ValueError(f'Could not find the YAML file {path}')
    with open(path, 'r') as f:
        content = yaml.load(stream=f, Loader=yaml.FullLoader)
    return content


def save_text_file(path: str,
                   content: str,
                   ) -> None:
    """
    Save a text file with LF line endings.
    An ``OSError`` is left to propagate to the caller.

    Args:
        path (str): The file path to save.
        content (str): The content to save.
    """
    if not isinstance(path, str):
        raise ValueError(f'path must be a string, got {path} which is a {type(path)}')
    with open(path, 'w', newline='\n') as f:
        f.write(content)


def to_json_line(content: Any) -> str:
    """
    Serialize a JSON-compatible object to a single line with sorted keys.

    Args:
        content (Any): The object to serialize.

    Returns:
        str: The JSON line (no trailing newline).
    """
    return json.dumps(content, sort_keys=True, separators=(',', ':'))


def csv_text(header: Sequence[str],
             rows: Iterable[Sequence[Any]],
             ) -> str:
    """
    Render rows as CSV text with a header line and LF line endings.

    Args:
        header (Sequence[str]): The column names.
        rows (Iterable[Sequence[Any]]): The rows, each with ``len(header)`` entries.

    Raises:
        ValueError: If a row has the wrong number of entries.

    Returns:
        str: The CSV text.
    """
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(header)
    for row in rows:
        if len(row) != len(header):
            raise ValueError(f'Expected {len(header)} entries per row, got {len(row)} in {row}')
        writer.writerow(row)
    return buffer.getvalue()
