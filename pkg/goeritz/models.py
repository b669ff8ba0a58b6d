"""
Pydantic models for verification reports

CheckRecord is the stable machine-readable schema: `verify --json` prints one
record per line and /api/verify returns a list of them.
"""

from pydantic import BaseModel


class CheckRecord(BaseModel):
    criterion: int          # acceptance criterion number, 1-7
    name: str
    passed: bool
    detail: str = ''


class OrbitReport(BaseModel):
    black_orbits: int
    white_orbits: int
    edge_orbits: int
    vertices_checked: int
    edges_checked: int

    @property
    def passed(self) -> bool:
        return self.black_orbits == self.white_orbits == self.edge_orbits == 1

