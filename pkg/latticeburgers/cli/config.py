import json

from latticeburgers import CFG

from . import command


@command(help='Print all the latticeburgers configs as JSON')
def config():
    print(json.dumps(CFG.dict(), indent=2, default=str))
