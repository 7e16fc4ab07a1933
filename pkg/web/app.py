"""
FastAPI Report Service for ellipsum
Read-only web view of the identity catalog with on-demand verification and count tables
"""

import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from fastapi import FastAPI, HTTPException, Request
from fastapi.templating import Jinja2Templates
from pydantic import BaseModel, Field

from src.cli import count_table, parse_points
from src.config.settings import settings
from src.core.exceptions import EllipsumError, UnknownIdentity
from src.identities.catalog import CatalogEntry, expand_jobs, list_identities, resolve
from src.identities.reports import VerifyReport
from src.identities.runner import run_jobs

logger = logging.getLogger(__name__)

app = FastAPI(
    title="ellipsum",
    description="Exact verification of theta function, pfaffian and sums of squares identities",
    version="1.0.0"
)

BASE_DIR = Path(__file__).resolve().parent
TEMPLATES_DIR = BASE_DIR / "templates"
if not TEMPLATES_DIR.exists():
    logger.error(f"Templates directory not found: {TEMPLATES_DIR}")

templates = Jinja2Templates(directory=str(TEMPLATES_DIR))


class VerifyRequest(BaseModel):
    """Body of POST /verify"""
    ids: List[str] = Field(min_length=1)
    m: Optional[int] = None
    k: Optional[int] = None
    order: Optional[int] = Field(default=None, ge=1)
    nmax: Optional[int] = None
    points: Optional[List[str]] = None


def _http_error(error: EllipsumError) -> HTTPException:
    if isinstance(error, UnknownIdentity):
        return HTTPException(status_code=404, detail=str(error))
    return HTTPException(status_code=422, detail=str(error))


@app.on_event("startup")
async def startup_event():
    logger.info("Starting ellipsum report service...")
    logger.info(f"Environment: {settings.environment}")
    logger.info(f"Catalog rows: {len(list_identities())}")


@app.get("/health")
async def health():
    return {"status": "healthy", "identities": len(list_identities())}


@app.get("/identities", response_model=List[CatalogEntry])
async def identities(tag: Optional[str] = None):
    """Catalog rows, optionally filtered by a tag glob"""
    try:
        return list_identities(tag)
    except EllipsumError as e:
        raise _http_error(e)


@app.get("/")
async def home(request: Request):
    """Catalog table"""
    return templates.TemplateResponse(request, "catalog.html", {
        "request": request,
        "entries": list_identities(),
        "environment": settings.environment,
    })


@app.post("/verify", response_model=List[VerifyReport])
def verify(body: VerifyRequest):
    """Run the matching identities with the given overrides; runs inline"""
    overrides: Dict[str, Any] = {'m': body.m, 'k': body.k, 'nmax': body.nmax}
    try:
        if body.points is not None:
            overrides['points'] = parse_points(','.join(body.points))
        jobs = []
        for row in resolve(body.ids):
            jobs.extend(expand_jobs(row, overrides, default_order=body.order or settings.order))
        logger.info(f"verify {body.ids}: {len(jobs)} jobs")
        return run_jobs(jobs)
    except EllipsumError as e:
        logger.error(f"Verify failed: {e}")
        raise _http_error(e)


@app.get("/count/{kind}/{k}")
def count(kind: str, k: int, nmax: int = 100, using: Optional[str] = None, m: Optional[int] = None):
    """Oracle counts for n <= nmax, with the formula's values when `using` names one"""
    try:
        return count_table(kind, k, nmax, using, m)
    except EllipsumError as e:
        logger.error(f"Count failed: {e}")
        raise _http_error(e)


if __name__ == "__main__":
    import uvicorn
    uvicorn.run(app, host="0.0.0.0", port=8000)
