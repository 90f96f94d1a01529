class UnionFind:
    """Disjoint sets over ``0 .. n-1``; the root of a class is its least member."""

    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return
        if ra < rb:
            self.parent[rb] = ra
        else:
            self.parent[ra] = rb

    def classes(self) -> tuple[list[int], list[int]]:
        """Return ``(class index per element, representative per class)``."""
        reps: dict[int, int] = {}
        which = []
        for x in range(len(self.parent)):
            r = self.find(x)
            if r not in reps:
                reps[r] = len(reps)
            which.append(reps[r])
        order = sorted(reps, key=reps.get)
        return which, order
