"""Version information for bug reports, after pandas' ``_print_versions``."""
import importlib
import json
import locale
import platform
import struct
import sys

DEPENDENCIES = [
    'skewtools',
    'galois',
    'numpy',
    'sympy',
    'tqdm',
    # setup/test
    'setuptools',
    'pip',
    'pytest',
]


def get_sys_info():
    """Returns ``(name, value)`` pairs describing the interpreter and platform."""
    sysname, _, release, _, machine, processor = platform.uname()
    return [
        ('python', sys.version),
        ('python-bits', struct.calcsize('P') * 8),
        ('OS', sysname),
        ('OS-release', release),
        ('machine', machine),
        ('processor', processor),
        ('byteorder', sys.byteorder),
        ('LOCALE', '%s.%s' % locale.getlocale()),
    ]


def get_deps_info():
    """Returns ``(module, version)`` pairs; ``None`` for missing modules."""
    blob = []
    for modname in DEPENDENCIES:
        try:
            mod = sys.modules.get(modname) or importlib.import_module(modname)
        except ImportError:
            blob.append((modname, None))
            continue
        blob.append((modname, getattr(mod, '__version__', 'installed')))
    return blob


def show_versions(as_json=False):
    """Prints system and dependency versions.

    Args:
        as_json (bool or str, optional): ``True`` prints a JSON document, a path
            writes it to that file.
    """
    sys_info = get_sys_info()
    deps_info = get_deps_info()
    if as_json:
        blob = {'system': dict(sys_info), 'dependencies': dict(deps_info)}
        if as_json is True:
            print(json.dumps(blob, indent=2))
        else:
            with open(as_json, 'w', encoding='utf8') as f:
                json.dump(blob, f, indent=2)
        return
    print('\nINSTALLED VERSIONS')
    print('------------------')
    for k, stat in sys_info:
        print('%s: %s' % (k, stat))
    print('')
    for k, stat in deps_info:
        print('%s: %s' % (k, stat))
