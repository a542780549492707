#!/usr/bin/env python3
import sys

for line in sys.stdin:
    print("three neighbours, probably", flush=True)
