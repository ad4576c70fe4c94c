"""
Utility functions for emitting tables.

Tables are pandas DataFrames; these helpers render them in the two stable
formats the command line prints and the golden files store.
"""

import pandas as pd

from . import config


def frame_to_tsv(df, columns=None):
    """
    Render a DataFrame as tab-separated text with a header row.

    Args:
        df: DataFrame to render
        columns: Optional list of columns to keep, in order

    Returns:
        str ending with a newline

    Example:
        frame_to_tsv(classify(spec), config.TABLE_COLUMNS)
    """
    if columns is not None:
        df = df[columns]
    return df.to_csv(sep=config.TABLE_SEP, index=False, lineterminator=config.LINE_TERMINATOR)


def frame_to_json_lines(df, columns=None):
    """
    Render a DataFrame as one JSON object per line.

    Args:
        df: DataFrame to render
        columns: Optional list of columns to keep, in order

    Returns:
        str, empty for an empty DataFrame, else ending with a newline

    Example:
        frame_to_json_lines(classify(spec), config.RECORD_FIELDS)
    """
    if columns is not None:
        df = df[columns]
    if df.empty:
        return ""
    text = df.to_json(orient="records", lines=True)
    return text if text.endswith(config.LINE_TERMINATOR) else text + config.LINE_TERMINATOR


def read_tsv(path):
    """Read a table written by frame_to_tsv back, every cell as a string."""
    return pd.read_csv(path, sep=config.TABLE_SEP, dtype=str, keep_default_na=False)
