"""
Driving the command-line tool
=============================

The same computations are available from the shell.  This script calls the
entry point in-process and shows the JSON output.
"""

import io
import json

from alcove_lab.cli import main

for argv in (
    ["compare", "--ctx", "D:3", "--mu", "1,0,0"],
    ["compare", "--ctx", "B:3", "--mu", "1,1,1"],
    ["steinberg", "--n", "2", "--maxlen", "3"],
):
    buf = io.StringIO()
    code = main(argv, out=buf)
    print("$ alcove-lab", " ".join(argv), f"  (exit {code})")
    print(buf.getvalue())

buf = io.StringIO()
main(["lift", "--ctx", "D:2", "--element", '{"t":[0,1],"s":[-2,-1]}', "--format", "json"], out=buf)
print(json.dumps(json.loads(buf.getvalue()), indent=1))
