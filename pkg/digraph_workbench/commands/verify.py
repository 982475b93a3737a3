"""Run the claim catalog"""

from ..claims import FAIL, FLAGGED, GROUP_ALIASES, PASS, SKIPPED, Context, groups, run_claims, select
from ..errors import WorkbenchError
from .utils import EXIT_CLAIM_FAILED, EXIT_OK


def list_claims():
    """Print every claim id with its description"""
    for claim in select():
        marker = ' (slow)' if claim.slow else ''
        print(f"{claim.id}{marker}: {claim.description}")
    return EXIT_OK


def verify(only=None, skip_slow=False, max_elements=None, threads=1, fmt='text'):
    """Run the selected claims and print one line per claim

    Returns:
        1 when any claim fails, 0 otherwise
    """
    if only:
        known = set(groups()) | set(GROUP_ALIASES) | {claim.id for claim in select()}
        unknown = [name for name in only if name not in known]
        if unknown:
            raise WorkbenchError(f"unknown claim or group: {', '.join(unknown)}")
    ctx = Context(threads=threads)
    if max_elements is not None:
        ctx.max_elements = max_elements
    results = run_claims(select(only, skip_slow), ctx)
    for r in results:
        if fmt == 'records':
            print(f"{r.id}\t{r.status}\t{r.details}")
        else:
            detail = f"  {r.details}" if r.details else ''
            print(f"{r.status:<13} {r.id}{detail}")
    counts = {status: sum(1 for r in results if r.status == status) for status in (PASS, FAIL, FLAGGED, SKIPPED)}
    if fmt == 'text':
        print(f"{len(results)} claims: {counts[PASS]} pass, {counts[FAIL]} fail, "
              f"{counts[FLAGGED]} flagged-typo, {counts[SKIPPED]} skipped-scale")
    return EXIT_CLAIM_FAILED if counts[FAIL] else EXIT_OK
