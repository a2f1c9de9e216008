"""
Document I/O

All input documents are JSON validated by a pydantic schema; output goes to a
file or to stdout. Validation failures become ConfigError carrying the dotted
location of the first offending field.
"""

import json
import logging
import sys
from pathlib import Path
from typing import Any, Optional, TypeVar

from pydantic import BaseModel, ValidationError

from holoembed.contrib.exceptions import ConfigError

logger = logging.getLogger(__name__)

SchemaT = TypeVar('SchemaT', bound=BaseModel)


def error_location(exc: ValidationError) -> str:
    """Dotted path of the first validation error, e.g. 'space.rows[1][0]'"""
    error = exc.errors()[0]
    path = ''
    for part in error['loc']:
        if isinstance(part, int):
            path += f'[{part}]'
        else:
            path += f'.{part}' if path else str(part)
    return path


def validate_document(data: Any, schema: type[SchemaT], source: str) -> SchemaT:
    try:
        return schema.model_validate(data)
    except ValidationError as exc:
        message = exc.errors()[0]['msg']
        raise ConfigError(f'{source}: {message}', path=error_location(exc) or None) from None


def load_document(path: str, schema: type[SchemaT], flag: str) -> SchemaT:
    """
    Read and validate a JSON document

    Args:
        path: File to read
        schema: Pydantic model of the document
        flag: Command line flag that named the file, used in messages

    Raises:
        ConfigError: If the file is unreadable, not JSON, or fails validation
    """
    logger.debug('loading %s from %s', schema.__name__, path)
    try:
        data = json.loads(Path(path).read_text(encoding='utf-8'))
    except OSError as exc:
        raise ConfigError(f'{flag} {path}: {exc.strerror or exc}') from None
    except json.JSONDecodeError as exc:
        raise ConfigError(f'{flag} {path}: not valid JSON ({exc.msg}, line {exc.lineno})') from None
    return validate_document(data, schema, f'{flag} {path}')


def dump_model(model: BaseModel) -> str:
    return model.model_dump_json(indent=2) + '\n'


def emit(text: str, out: Optional[str] = None) -> None:
    """Write text to the output file, or to stdout when none is given"""
    if out is None:
        sys.stdout.write(text)
        return
    try:
        Path(out).write_text(text, encoding='utf-8')
    except OSError as exc:
        raise ConfigError(f'--out {out}: {exc.strerror or exc}') from None
    logger.info('wrote %s', out)
