"""Minimal disjoint-set union over hashable items."""

from __future__ import annotations

from typing import Hashable, Iterable


class DisjointSet:
    def __init__(self, items: Iterable[Hashable]):
        self.parent = {x: x for x in items}
        self.components = len(self.parent)

    def find(self, x: Hashable) -> Hashable:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: Hashable, y: Hashable) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        self.parent[ry] = rx
        self.components -= 1
        return True

    def component_of(self, x: Hashable) -> set:
        root = self.find(x)
        return {y for y in self.parent if self.find(y) == root}
