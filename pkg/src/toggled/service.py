"""Session-oriented HTTP JSON API for playing and solving Lights Out boards.

Endpoints:
  POST /sessions                        create a session
  GET  /sessions/{id}                   current state
  POST /sessions/{id}/press             press one vertex
  GET  /sessions/{id}/hint              next vertex of a cached solution
  GET  /sessions/{id}/solution?method=  full press-set (gf2 or inductive)
  POST /sessions/{id}/scramble          seeded random presses
  POST /sessions/{id}/reset             back to the initial configuration

Errors carry a JSON {"error": string} body. Sessions live in memory; an
optional snapshot file is loaded at startup and written at shutdown.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import threading
import uuid
from contextlib import asynccontextmanager
from dataclasses import dataclass, field

from fastapi import Body, FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from .bits import BitVector
from .errors import CapExceededError
from .generators import generate
from .gf2 import Elimination, build_system, eliminate, solve_using
from .graphs import Graph, parse_graph, to_json_obj
from .inductive import DEFAULT_N_CAP, complementing_set

DEFAULT_SERVICE_CAP = 10_000


class ApiError(Exception):
    def __init__(self, status: int, message: str):
        super().__init__(message)
        self.status = status
        self.message = message


@dataclass
class Session:
    id: str
    graph: Graph
    initial: BitVector
    current: BitVector
    goal: BitVector
    seed: int
    solvable: bool
    elimination: Elimination
    history: list[int] = field(default_factory=list)
    cached_solution: BitVector | None = None
    lock: threading.Lock = field(default_factory=threading.Lock)

    def solved(self) -> bool:
        return self.current == self.goal

    def summary(self) -> dict:
        return {
            "id": self.id,
            "n": self.graph.n,
            "edges": to_json_obj(self.graph)["edges"],
            "current": self.current.to_string(),
            "goal": self.goal.to_string(),
            "moves": len(self.history),
            "solved": self.solved(),
            "solvable": self.solvable,
        }

    def state(self) -> dict:
        return {
            "current": self.current.to_string(),
            "moves": len(self.history),
            "solved": self.solved(),
        }

    def apply_press(self, v: int) -> None:
        # caller holds the lock; keeps the cached solution valid by XOR
        self.current = BitVector(self.graph.n, self.current.mask ^ self.graph.closed[v])
        self.history.append(v)
        if self.cached_solution is not None:
            self.cached_solution = self.cached_solution ^ BitVector.from_indices(self.graph.n, [v])

    def to_snapshot(self) -> dict:
        return {
            "id": self.id,
            "graph": to_json_obj(self.graph),
            "initial": self.initial.to_string(),
            "current": self.current.to_string(),
            "goal": self.goal.to_string(),
            "seed": self.seed,
            "history": list(self.history),
        }


class SessionStore:
    def __init__(self) -> None:
        self._sessions: dict[str, Session] = {}
        self._lock = threading.Lock()

    def add(self, session: Session) -> None:
        with self._lock:
            self._sessions[session.id] = session

    def get(self, session_id: str) -> Session:
        with self._lock:
            session = self._sessions.get(session_id)
        if session is None:
            raise ApiError(404, f"unknown session {session_id}")
        return session

    def snapshot(self) -> list[dict]:
        with self._lock:
            return [s.to_snapshot() for s in self._sessions.values()]

    def save(self, path: str) -> None:
        tmp = path + ".tmp"
        with open(tmp, "w", encoding="utf-8") as fh:
            json.dump(self.snapshot(), fh)
        os.replace(tmp, path)

    def load(self, path: str) -> int:
        with open(path, "r", encoding="utf-8") as fh:
            records = json.load(fh)
        count = 0
        for rec in records:
            graph = Graph.from_edges(rec["graph"]["n"], [tuple(e) for e in rec["graph"]["edges"]])
            session = _make_session(
                graph,
                initial=BitVector.from_string(rec["initial"]),
                goal=BitVector.from_string(rec["goal"]),
                seed=rec.get("seed", 0),
                session_id=rec["id"],
            )
            session.current = BitVector.from_string(rec["current"])
            session.history = list(rec.get("history", []))
            self.add(session)
            count += 1
        return count


def _make_session(
    graph: Graph,
    initial: BitVector,
    goal: BitVector,
    seed: int,
    session_id: str | None = None,
) -> Session:
    elim = eliminate(build_system(graph))
    solvable = solve_using(elim, initial ^ goal) is not None
    return Session(
        id=session_id or uuid.uuid4().hex,
        graph=graph,
        initial=initial,
        current=initial,
        goal=goal,
        seed=seed,
        solvable=solvable,
        elimination=elim,
    )


def _graph_from_spec(spec, max_n: int) -> Graph:
    if not isinstance(spec, dict):
        raise ApiError(400, "graph spec must be an object")
    try:
        if "text" in spec:
            g = parse_graph(spec["text"])
        elif "kind" in spec:
            g = generate(spec["kind"], spec.get("params", ()), seed=spec.get("seed"))
        elif "n" in spec:
            g = parse_graph(json.dumps({"n": spec.get("n"), "edges": spec.get("edges", [])}))
        else:
            raise ApiError(400, 'graph spec needs "n"/"edges", "kind", or "text"')
    except ValueError as exc:
        raise ApiError(400, str(exc)) from None
    if g.n > max_n:
        raise ApiError(422, f"graph has {g.n} vertices, above the service cap {max_n}")
    return g


def _bits_field(raw, n: int, what: str) -> BitVector:
    if not isinstance(raw, str):
        raise ApiError(400, f"{what} must be a 0/1 string")
    try:
        bits = BitVector.from_string(raw)
    except ValueError as exc:
        raise ApiError(400, f"{what}: {exc}") from None
    if bits.n != n:
        raise ApiError(400, f"{what} has length {bits.n}, graph has {n} vertices")
    return bits


def create_app(
    store: SessionStore | None = None,
    max_n: int = DEFAULT_SERVICE_CAP,
    inductive_cap: int = DEFAULT_N_CAP,
    allow_origin: str = "*",
    snapshot_path: str | None = None,
) -> FastAPI:
    sessions = store if store is not None else SessionStore()

    @asynccontextmanager
    async def lifespan(_: FastAPI):
        if snapshot_path and os.path.exists(snapshot_path):
            sessions.load(snapshot_path)
        yield
        if snapshot_path:
            sessions.save(snapshot_path)

    app = FastAPI(title="toggled hint service", lifespan=lifespan)
    app.state.store = sessions
    if allow_origin:
        app.add_middleware(
            CORSMiddleware,
            allow_origins=[allow_origin],
            allow_methods=["*"],
            allow_headers=["*"],
        )

    @app.exception_handler(ApiError)
    async def _api_error(_: Request, exc: ApiError):
        return JSONResponse({"error": exc.message}, status_code=exc.status)

    @app.exception_handler(CapExceededError)
    async def _cap_error(_: Request, exc: CapExceededError):
        return JSONResponse({"error": str(exc)}, status_code=422)

    @app.exception_handler(RequestValidationError)
    async def _validation_error(_: Request, exc: RequestValidationError):
        return JSONResponse({"error": str(exc)}, status_code=400)

    @app.post("/sessions", status_code=201)
    def create_session(body: dict = Body(...)):
        graph = _graph_from_spec(body.get("graph"), max_n)
        seed = body.get("seed", 0)
        if not isinstance(seed, int) or isinstance(seed, bool):
            raise ApiError(400, "seed must be an integer")
        raw_initial = body.get("initial", "0" * graph.n)
        if raw_initial == "random":
            initial = BitVector(graph.n, random.Random(seed).getrandbits(graph.n) if graph.n else 0)
        else:
            initial = _bits_field(raw_initial, graph.n, "initial")
        raw_goal = body.get("goal", "complement")
        goal = ~initial if raw_goal == "complement" else _bits_field(raw_goal, graph.n, "goal")
        session = _make_session(graph, initial, goal, seed)
        sessions.add(session)
        return session.summary()

    @app.get("/sessions/{session_id}")
    def get_session(session_id: str):
        session = sessions.get(session_id)
        with session.lock:
            return session.summary()

    @app.post("/sessions/{session_id}/press")
    def press_vertex(session_id: str, body: dict = Body(...)):
        session = sessions.get(session_id)
        v = body.get("v")
        if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < session.graph.n:
            raise ApiError(400, f"vertex must be an integer in [0, {session.graph.n})")
        with session.lock:
            session.apply_press(v)
            return session.state()

    @app.get("/sessions/{session_id}/hint")
    def hint(session_id: str):
        session = sessions.get(session_id)
        with session.lock:
            if session.solved():
                return {"status": "already solved"}
            if not session.solvable:
                return {"status": "unsolvable"}
            if session.cached_solution is None:
                outcome = solve_using(session.elimination, session.current ^ session.goal)
                assert outcome is not None  # guarded by the solvable flag
                session.cached_solution = outcome.particular
            remaining = session.cached_solution
            assert remaining.mask, "empty cached solution on an unsolved session"
            vertex = (remaining.mask & -remaining.mask).bit_length() - 1
            return {"status": "ok", "vertex": vertex, "remaining": remaining.weight}

    @app.get("/sessions/{session_id}/solution")
    def full_solution(session_id: str, method: str = "gf2"):
        if method not in ("gf2", "inductive"):
            raise ApiError(400, f"method must be gf2 or inductive, got {method!r}")
        session = sessions.get(session_id)
        with session.lock:
            if method == "inductive":
                if session.goal != ~session.current:
                    raise ApiError(
                        409,
                        "inductive method solves only the complement of the current configuration",
                    )
                press_set, trace = complementing_set(session.graph, n_cap=inductive_cap)
                payload_trace = trace.to_json()
            else:
                outcome = solve_using(session.elimination, session.current ^ session.goal)
                if outcome is None:
                    return {"status": "unsolvable", "method": method}
                press_set = outcome.particular
                payload_trace = None
            session.cached_solution = press_set
            payload = {
                "status": "ok",
                "method": method,
                "press_set": press_set.to_string(),
                "indices": press_set.indices(),
                "weight": press_set.weight,
            }
            if payload_trace is not None:
                payload["trace"] = payload_trace
            return payload

    @app.post("/sessions/{session_id}/scramble")
    def scramble(session_id: str, body: dict = Body(...)):
        session = sessions.get(session_id)
        k = body.get("k")
        if not isinstance(k, int) or isinstance(k, bool) or k < 0:
            raise ApiError(400, "k must be a non-negative integer")
        seed = body.get("seed", session.seed)
        if not isinstance(seed, int) or isinstance(seed, bool):
            raise ApiError(400, "seed must be an integer")
        if k > 0 and session.graph.n == 0:
            raise ApiError(400, "cannot scramble an empty graph")
        with session.lock:
            rng = random.Random(seed)
            for _ in range(k):
                session.apply_press(rng.randrange(session.graph.n))
            return session.state()

    @app.post("/sessions/{session_id}/reset")
    def reset(session_id: str):
        session = sessions.get(session_id)
        with session.lock:
            session.current = session.initial
            session.history.clear()
            session.cached_solution = None
            return session.state()

    return app


def main() -> None:
    import uvicorn

    parser = argparse.ArgumentParser(prog="toggled-serve", description=__doc__)
    parser.add_argument("--addr", default="127.0.0.1")
    parser.add_argument("--port", type=int, default=8642)
    parser.add_argument("--allow-origin", default="*")
    parser.add_argument("--max-n", type=int, default=DEFAULT_SERVICE_CAP)
    parser.add_argument("--snapshot", default=None)
    args = parser.parse_args()
    app = create_app(
        max_n=args.max_n,
        allow_origin=args.allow_origin,
        snapshot_path=args.snapshot,
    )
    uvicorn.run(app, host=args.addr, port=args.port)


if __name__ == "__main__":
    main()
