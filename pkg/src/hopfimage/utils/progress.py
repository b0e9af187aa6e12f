from contextlib import contextmanager

from tqdm import tqdm


@contextmanager
def managed_progress_bar(total: int, desc: str = "Processing", unit: str = " levels", disable: bool = False):
    progress_bar = tqdm(total=total, unit=unit, position=0, desc=desc, leave=True, disable=disable)
    try:
        yield progress_bar
    finally:
        progress_bar.close()
