#!/usr/bin/env python3
"""
Test runner for the straddle STIRAP simulator.

Runs every test script in the tests directory, each in its own process.
Pass one or more names (e.g. ``model sweep``) to run a subset. The same
files are also collected by ``pytest tests/``.
"""

import os
import subprocess
import sys
import time
from pathlib import Path

ROOT = Path(__file__).parent

TESTS = [
    "tests/test_model.py",
    "tests/test_dynamics.py",
    "tests/test_observables.py",
    "tests/test_sweep.py",
    "tests/test_cli.py",
]


# Per test script
TIMEOUT_SECONDS = 1800

# Lines of a failing script's output shown in the summary
TAIL_LINES = 40


def tail(text: str) -> str:
    return "\n".join(text.rstrip().splitlines()[-TAIL_LINES:])


def run_test_file(test_file: str) -> bool:
    """Run one test script in a fresh interpreter and report its outcome."""
    env = {**os.environ, "PYTHONPATH": str(ROOT), "STIRAP_LOG_LEVEL": "WARNING"}
    started = time.perf_counter()
    try:
        result = subprocess.run([sys.executable, test_file], capture_output=True, text=True,
                                cwd=ROOT, env=env, timeout=TIMEOUT_SECONDS)
    except subprocess.TimeoutExpired:
        print(f"⏱️  {test_file} - TIMED OUT after {TIMEOUT_SECONDS}s")
        return False
    elapsed = time.perf_counter() - started

    if result.returncode == 0:
        print(f"✅ {test_file} - PASSED ({elapsed:.1f}s)")
        return True

    print(f"❌ {test_file} - FAILED with status {result.returncode} ({elapsed:.1f}s)")
    for label, stream in (("stdout", result.stdout), ("stderr", result.stderr)):
        if stream.strip():
            print(f"--- {label} (last {TAIL_LINES} lines) ---")
            print(tail(stream))
    return False


def main(selected: list[str]) -> int:
    """Run all (or the selected) tests."""
    print("🧪 Straddle STIRAP - Test Suite")
    print("=" * 50)

    tests = [t for t in TESTS if not selected or Path(t).stem.removeprefix("test_") in selected]
    if not tests:
        print(f"⚠️  No test files match {selected}")
        return 1

    results = []
    for test in tests:
        if (ROOT / test).exists():
            results.append(run_test_file(test))
        else:
            print(f"⚠️  {test} - FILE NOT FOUND")
            results.append(False)

    print("\n" + "=" * 50)

    passed = sum(results)
    total = len(results)

    if passed == total:
        print(f"🎉 All tests passed! ({passed}/{total})")
        return 0
    else:
        print(f"❌ Some tests failed: {passed}/{total} passed")
        return 1


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
