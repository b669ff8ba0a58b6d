"""
FastAPI backend for the Goeritz group calculator
"""

from dotenv import load_dotenv
load_dotenv()

from fastapi import FastAPI, HTTPException, Query
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import PlainTextResponse
from typing import Optional
import logging
import os

from sympy import oo

from goeritz import config
from goeritz.acceptance import run_all
from goeritz.bass_serre_tree import amalgam_form, build_ball, classify_isometry, to_dot
from goeritz.errors import ResourceBoundError, WordParseError
from goeritz.f2_kernel import (
    canonical_cyclic_word, classify_disk_word, exponent_sums, is_primitive, parse_f2_word,
)
from goeritz.goeritz_algebra import SubgroupId, element, format_normal_form, is_member, order
from api.models import (
    NormalFormResponse, EqualResponse, OrderResponse, MemberResponse,
    Syllable, AmalgamResponse, ClassifyResponse, PrimitiveResponse, VerifyResponse,
)

# Configure logging
logging.basicConfig(level=config.LOG_LEVEL, format=config.LOG_FORMAT)
logger = logging.getLogger(__name__)

# Initialize FastAPI app
app = FastAPI(title="Goeritz API", version="1.0.0")

# Add CORS middleware
app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)


def parse_word(word: str):
    """Goeritz word -> NormalForm, 400 on a bad letter"""
    try:
        return element(word)
    except WordParseError as e:
        raise HTTPException(status_code=400, detail=str(e))


def parse_f2(word: str):
    try:
        return parse_f2_word(word)
    except WordParseError as e:
        raise HTTPException(status_code=400, detail=str(e))


@app.get("/health")
def health_check():
    """Health check endpoint for monitoring"""
    return {
        "status": "healthy",
        "service": "Goeritz API",
        "version": "1.0.0",
        "environment": os.getenv("ENVIRONMENT", "development")
    }


@app.get("/api/normalize", response_model=NormalFormResponse)
def normalize(word: str = Query("")):
    n = parse_word(word)
    return NormalFormResponse(word=word, eps_exp=n.eps_exp, alpha_bit=n.alpha_bit,
                              core=n.core, normal_form=format_normal_form(n))


@app.get("/api/equal", response_model=EqualResponse)
def equal(left: str = Query(""), right: str = Query("")):
    return EqualResponse(left=left, right=right, equal=parse_word(left) == parse_word(right))


@app.get("/api/order", response_model=OrderResponse)
def get_order(word: str = Query("")):
    value = order(parse_word(word))
    return OrderResponse(word=word, order='infinite' if value == oo else int(value))


@app.get("/api/member", response_model=MemberResponse)
def member(subgroup: str, word: str = Query("")):
    """
    Stabilizer membership.
    subgroup: StabE, StabPairSetwise, StabPairPointwise, StabEEprime,
    StabEDualPair, StabDualsPointwise, StabPairEprime, StabPairDualPair
    """
    n = parse_word(word)
    try:
        tag = SubgroupId(subgroup)
    except ValueError:
        raise HTTPException(status_code=400, detail=f"Unknown subgroup {subgroup!r}")
    return MemberResponse(word=word, subgroup=tag.value, member=is_member(n, tag))


@app.get("/api/amalgam", response_model=AmalgamResponse)
def amalgam(word: str = Query("")):
    form = amalgam_form(parse_word(word))
    return AmalgamResponse(
        word=word,
        prefix=format_normal_form(form.prefix),
        syllables=[Syllable(side=s.side.value, core=s.rep.core) for s in form.syllables],
    )


@app.get("/api/classify", response_model=ClassifyResponse)
def classify(word: str = Query("")):
    iso = classify_isometry(parse_word(word))
    return ClassifyResponse(
        word=word,
        kind=iso.kind.value,
        translation_length=iso.translation_length,
        witness=iso.witness.label,
        summary=str(iso),
    )


@app.get("/api/primitive", response_model=PrimitiveResponse)
def primitive(word: str = Query("")):
    """Primitivity and disk class of an F2 word (x, y, X, Y)"""
    w = parse_f2(word)
    return PrimitiveResponse(
        word=word,
        primitive=is_primitive(w),
        disk_class=classify_disk_word(w).value,
        cyclic_word=str(canonical_cyclic_word(w)),
        exponent_sums=list(exponent_sums(w)),
    )


@app.get("/api/ball", response_class=PlainTextResponse)
def ball(radius: int = Query(config.DEFAULT_RADIUS, ge=0),
         branch_bound: int = Query(config.DEFAULT_BRANCH_BOUND, ge=1)):
    """Ball of the tree around the base edge, as DOT"""
    try:
        return to_dot(build_ball(radius, branch_bound))
    except ResourceBoundError as e:
        raise HTTPException(status_code=422, detail=str(e))


@app.get("/api/verify", response_model=VerifyResponse)
def verify(radius: int = Query(config.DEFAULT_RADIUS, ge=1),
           branch_bound: int = Query(config.DEFAULT_BRANCH_BOUND, ge=1),
           oracle_length: int = Query(config.DEFAULT_ORACLE_LENGTH, ge=1),
           seed: Optional[int] = None):
    """Run the acceptance suite. Slow at default settings."""
    try:
        records = run_all(radius=radius, branch_bound=branch_bound,
                          oracle_length=oracle_length, seed=seed)
    except ResourceBoundError as e:
        raise HTTPException(status_code=422, detail=str(e))

    failed = sum(not r.passed for r in records)
    logger.info(f"verify: {len(records) - failed}/{len(records)} passed")
    return VerifyResponse(
        passed=failed == 0,
        total=len(records),
        failed=failed,
        radius=radius,
        branch_bound=branch_bound,
        oracle_length=oracle_length,
        seed=seed,
        checks=records,
    )


if __name__ == "__main__":
    import uvicorn
    uvicorn.run(app, host="0.0.0.0", port=8000, reload=True)
