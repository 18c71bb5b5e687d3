"""
Operations on dictionaries used to fill and combine config files,
``key=value`` files and environment variables
"""

import os
import sys
import typing as t
from enum import Enum
from pathlib import Path

Dict = t.Dict[str, t.Any]
StrDict = t.Dict[str, str]

SEP = '_'
_NONE = object()
_TRUE = {'1', 'true', 'yes', 'on'}
_FALSE = {'0', 'false', 'no', 'off'}


def combine_configs(dicts: t.Sequence[Dict]) -> Dict:
    """
    Merge nested dicts left to right, later values winning.

    :param dicts: The dicts to merge
    """
    result: Dict = {}
    for d in dicts:
        _combine_one(result, d)
    return result


def environ_to_config_dict(
    prefix: str,
    parent: Dict,
    environ: t.Optional[StrDict] = None,
    err: t.Optional[t.TextIO] = sys.stderr,
    fail: bool = False,
) -> Dict:
    """
    Collect the environment variables starting with ``prefix`` into a nested
    dict shaped like ``parent``, coercing each value to the type it replaces.

    :param prefix: Upper case prefix ending in ``_``, e.g. ``LATTICEBURGERS_``
    :param parent: The nested dict of defaults
    :param environ: The environment (``os.environ`` when ``None``)
    :param err: Stream for reporting unknown or ambiguous names
    :param fail: Raise instead of only reporting bad names
    """
    env_dict = _environ_dict(prefix, environ)
    good, bad = _env_dict_to_config_dict(env_dict, parent)

    if bad:
        bad = {k: ', '.join([prefix + i.upper() for i in v]) for k, v in bad.items()}
        msg = '\n'.join(f'{k}: {v}' for k, v in sorted(bad.items()))

        s = 's' * (sum(len(v) for v in bad.values()) != 1)
        msg = f'Bad environment variable{s}:\n{msg}'
        if err is not None:
            print(msg, file=err)
        if fail:
            raise ValueError(msg)

    return good


def read_key_values(path: t.Union[str, Path]) -> StrDict:
    """
    Read a ``key=value`` file: one pair per line, ``#`` starts a comment,
    blank lines are skipped.

    :param path: The file to read
    """
    result: StrDict = {}
    for number, raw in enumerate(Path(path).read_text().splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition('=')
        if not sep or not key.strip():
            raise ValueError(f'{path}:{number}: expected key=value, got {raw!r}')
        result[key.strip().replace('-', '_')] = value.strip()
    return result


def coerce(value: t.Any, like: t.Any) -> t.Any:
    """
    Convert a string to the type of ``like``; non-strings pass through.

    >>> coerce('0.5', 1.0)
    0.5
    >>> coerce('off', True)
    False
    """
    if not isinstance(value, str) or like is None or isinstance(like, str):
        if isinstance(like, Enum) and isinstance(value, str):
            return type(like)(value)
        return value
    if isinstance(like, bool):
        lowered = value.lower()
        if lowered in _TRUE:
            return True
        if lowered in _FALSE:
            return False
        raise ValueError(f'Cannot read {value!r} as a boolean')
    if isinstance(like, int):
        return int(value)
    if isinstance(like, float):
        return float(value)
    return value


def _split_address(key: str, parent: Dict) -> t.Iterator[t.Tuple[str, ...]]:
    def split(key, parent, *address):
        if key in parent:
            yield *address, key

        for k, v in parent.items():
            if key.startswith(ks := k + SEP) and isinstance(v, dict):
                yield from split(key[len(ks) :], v, *address, k)

    return split(key, parent)


def _environ_dict(prefix: str, environ: t.Optional[StrDict] = None) -> StrDict:
    if not (prefix.isupper() and prefix.endswith(SEP) and not prefix.startswith(SEP)):
        raise ValueError(f'Bad prefix={prefix}')

    d = os.environ if environ is None else environ
    items = ((k, v) for k, v in d.items() if k.isupper() and k.startswith(prefix))
    return {k[len(prefix) :].lower(): v for k, v in items}


def _combine_one(target, source):
    for k, v in source.items():
        old_v = target.get(k, _NONE)
        if old_v is _NONE:
            target[k] = v

        elif isinstance(old_v, dict) and not isinstance(v, dict):
            raise ValueError(f'Expected a section for key={k} but got {type(v)}')

        elif isinstance(v, dict):
            _combine_one(old_v, v)

        else:
            target[k] = v


def _env_dict_to_config_dict(env_dict: StrDict, parent: Dict) -> t.Tuple[Dict, Dict]:
    good: Dict = {}
    bad: t.Dict[str, t.List[str]] = {}

    for k, v in env_dict.items():
        addresses = list(_split_address(k, parent))
        if not addresses:
            bad.setdefault('unknown', []).append(k)
        elif len(addresses) > 1:
            bad.setdefault('ambiguous', []).append(k)
        else:
            d, default = good, parent
            *address, last = addresses[0]
            for a in address:
                d = d.setdefault(a, {})
                default = default[a]
            d[last] = coerce(v, default[last])

    return good, bad
