from .union_find import UnionFind, find_orbits
from .progress import managed_progress_bar
