import threading

from typing import Any, Callable, Dict, Optional

from fastapi import APIRouter, HTTPException, status
from pydantic import BaseModel, Field

from src.api import global_
from src.api.config import BACKENDS, OPTIONS, SIGNS
from src.api.constants import BACKEND
from src.api.errors import Error
from src.cycles.context import CycleContext
from src.eph import jsonio
from src.eph.commands import COMMANDS
from src.verify import run_suite

# Upper bound of trials accepted by /verify
MAX_VERIFY_TRIALS = 20


class Context(BaseModel):
    sigma: int = -1
    sigma_breve: Optional[int] = None
    s: int = 1
    varsigma: Optional[int] = None

    def make(self) -> CycleContext:
        return CycleContext.make(self.sigma, self.sigma_breve, self.s, self.varsigma)


class GeometryRequest(BaseModel):
    """The CLI document plus the signature context and the backend"""

    context: Optional[Context] = None  # the configured signs when missing
    backend: Optional[str] = None
    document: Dict[str, Any]


class VerifyRequest(BaseModel):
    seed: int = global_.DEFAULT_SEED
    trials: int = Field(5, ge=0, le=MAX_VERIFY_TRIALS)
    backend: Optional[str] = None
    only: Optional[str] = None


geometry_endpoint = APIRouter()


class TimeoutException(Exception):
    pass


def run_with_threading(func: Callable, timeout: float):
    """Runs func() in a daemon thread. The thread is abandoned on timeout."""
    result = [None]
    exception = [None]

    def target():
        try:
            result[0] = func()
        except Exception as e:
            exception[0] = e

    thread = threading.Thread(target=target)
    thread.daemon = True
    thread.start()
    thread.join(timeout)

    if thread.is_alive():
        raise TimeoutException(f"Operation timed out after {timeout} seconds")

    if exception[0]:
        raise exception[0]

    return result[0]


def _check_choices(args: GeometryRequest) -> None:
    values = [] if args.context is None else list(args.context.dict().values())
    invalid = [x for x in values if x is not None and x not in SIGNS]
    if invalid:
        raise HTTPException(status_code=status.HTTP_422_UNPROCESSABLE_ENTITY, detail=f"Invalid sign(s) {invalid}")
    if args.backend is not None and args.backend not in BACKENDS:
        raise HTTPException(status_code=status.HTTP_422_UNPROCESSABLE_ENTITY, detail=f"Invalid backend '{args.backend}'")


def handle(command: str, args: GeometryRequest) -> Dict[str, Any]:
    _check_choices(args)
    try:
        default = CycleContext.from_options() if args.context is None else args.context.make()
        ctx = jsonio.read_context(args.document.get("context"), default)
        return run_with_threading(
            lambda: COMMANDS[command](args.document, ctx, BACKEND(args.backend or OPTIONS.backend)),
            global_.SERVICE_TIMEOUT,
        )
    except TimeoutException as e:
        raise HTTPException(status_code=status.HTTP_408_REQUEST_TIMEOUT, detail=str(e))
    except Error as e:
        raise HTTPException(status_code=status.HTTP_422_UNPROCESSABLE_ENTITY, detail=str(e))


@geometry_endpoint.post("/transform")
def handle_transform(args: GeometryRequest) -> Dict[str, Any]:
    return handle("transform", args)


@geometry_endpoint.post("/relate")
def handle_relate(args: GeometryRequest) -> Dict[str, Any]:
    return handle("relate", args)


@geometry_endpoint.post("/measure")
def handle_measure(args: GeometryRequest) -> Dict[str, Any]:
    return handle("measure", args)


@geometry_endpoint.post("/cayley")
def handle_cayley(args: GeometryRequest) -> Dict[str, Any]:
    return handle("cayley", args)


@geometry_endpoint.post("/verify")
def handle_verify(args: VerifyRequest) -> Dict[str, Any]:
    if args.backend is not None and args.backend not in BACKENDS:
        raise HTTPException(status_code=status.HTTP_422_UNPROCESSABLE_ENTITY, detail=f"Invalid backend '{args.backend}'")

    try:
        report = run_with_threading(
            lambda: run_suite(args.seed, args.trials, args.backend or OPTIONS.backend, args.only), global_.SERVICE_TIMEOUT
        )
    except TimeoutException as e:
        raise HTTPException(status_code=status.HTTP_408_REQUEST_TIMEOUT, detail=str(e))
    return report.as_dict()
