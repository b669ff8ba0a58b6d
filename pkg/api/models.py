"""
Pydantic models for API responses
"""

from pydantic import BaseModel
from typing import Optional, List, Union

from goeritz.models import CheckRecord


class NormalFormResponse(BaseModel):
    word: str
    eps_exp: int
    alpha_bit: int
    core: str
    normal_form: str            # e^n a^b | core


class EqualResponse(BaseModel):
    left: str
    right: str
    equal: bool


class OrderResponse(BaseModel):
    word: str
    order: Union[int, str]      # integer or "infinite"


class MemberResponse(BaseModel):
    word: str
    subgroup: str
    member: bool


class Syllable(BaseModel):
    side: str                   # A = G_{E}, B = G_{DuE}
    core: str


class AmalgamResponse(BaseModel):
    word: str
    prefix: str
    syllables: List[Syllable]


class ClassifyResponse(BaseModel):
    word: str
    kind: str                   # elliptic / hyperbolic
    translation_length: int
    witness: str                # fixed vertex, or a vertex on the axis
    summary: str


class PrimitiveResponse(BaseModel):
    word: str
    primitive: bool
    disk_class: str
    cyclic_word: str
    exponent_sums: List[int]


class VerifyResponse(BaseModel):
    passed: bool
    total: int
    failed: int
    radius: int
    branch_bound: int
    oracle_length: int
    seed: Optional[int] = None
    checks: List[CheckRecord]
