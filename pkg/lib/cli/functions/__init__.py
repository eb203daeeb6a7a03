from lib.cli.functions.generate_graphs import generate_graph
from lib.cli.functions.verify_suite import verify_suite
