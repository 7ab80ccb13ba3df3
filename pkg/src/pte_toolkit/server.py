"""
Tool server for pte-toolkit.

Exposes the solvers as tools over line-delimited JSON-RPC 2.0 on stdio.
Games travel as text in the game file format.
"""

import json
import logging
import os
import sys
from typing import Any, Optional

from . import __version__
from .analysis import classify, verify_inclusions
from .concepts import CONCEPTS, solve_all, solve_concept
from .corpus import run_corpus
from .game import Game, break_ties
from .gamefile import parse_game, serialize_game
from .newcomb import (
    NewcombProblem,
    Theory,
    canonical_problem,
    expected_utilities,
    recommendation_sweep,
)
from .reports import game_record
from .sampler import SampleConfig, sample_game

logger = logging.getLogger(__name__)

GAME_TEXT = {
    "type": "string",
    "description": "Game in text format (players:, strategies:, optional labels:, payoff lines)",
}

BREAK_TIES = {
    "type": ["boolean", "integer"],
    "description": "Re-rank payoffs ordinally before solving: true breaks ties by profile order, "
    "an integer by a random order from that seed",
}


class PteToolServer:
    """JSON-RPC server exposing the solution concepts as tools."""

    def __init__(self, corpus_path: Optional[str] = None):
        """Initialize the server.

        Args:
            corpus_path: corpus directory for ``run_corpus`` (PTE_CORPUS_DIR or bundled data)
        """
        self.corpus_path = corpus_path or os.getenv("PTE_CORPUS_DIR")
        logger.info("PTE tool server initialized")

    def get_tools(self) -> list:
        """Return list of available tools."""
        return [
            {
                "name": "solve_game",
                "description": "Solve a game for one solution concept, or all of them",
                "inputSchema": {
                    "type": "object",
                    "properties": {
                        "game": GAME_TEXT,
                        "break_ties": BREAK_TIES,
                        "concept": {
                            "type": "string",
                            "enum": [*CONCEPTS, "all"],
                            "description": "Solution concept (default: pte)",
                            "default": "pte",
                        },
                        "lenient": {
                            "type": "boolean",
                            "description": "Accept games with payoff ties",
                            "default": False,
                        },
                    },
                    "required": ["game"],
                },
            },
            {
                "name": "classify_game",
                "description": "Run every solver and the theorem checks on a game",
                "inputSchema": {
                    "type": "object",
                    "properties": {
                        "game": GAME_TEXT,
                        "break_ties": BREAK_TIES,
                        "lenient": {"type": "boolean", "default": False},
                        "include_trace": {"type": "boolean", "default": True},
                    },
                    "required": ["game"],
                },
            },
            {
                "name": "verify_game",
                "description": "List violated inclusions (expected: none)",
                "inputSchema": {
                    "type": "object",
                    "properties": {
                        "game": GAME_TEXT,
                        "break_ties": BREAK_TIES,
                        "lenient": {"type": "boolean", "default": False},
                    },
                    "required": ["game"],
                },
            },
            {
                "name": "newcomb_verdict",
                "description": "Expected utilities of one-boxing and two-boxing",
                "inputSchema": {
                    "type": "object",
                    "properties": {
                        "theory": {"type": "string", "enum": [t.value for t in Theory]},
                        "prior": {"type": "string", "description": "P(FULL) for CDT"},
                        "accuracy": {"type": "string", "description": "Predictor accuracy"},
                        "payoffs": {
                            "type": "array",
                            "items": {"type": "string"},
                            "description": "two-full, one-full, two-empty, one-empty",
                        },
                        "sweep": {
                            "type": "array",
                            "items": {"type": "string"},
                            "description": "Prior (CDT) or accuracy values to sweep",
                        },
                    },
                    "required": ["theory"],
                },
            },
            {
                "name": "sample_game",
                "description": "Draw game number `index` of a seeded random stream",
                "inputSchema": {
                    "type": "object",
                    "properties": {
                        "shape": {"type": "array", "items": {"type": "integer"}},
                        "seed": {"type": "integer", "default": 0},
                        "index": {"type": "integer", "default": 0},
                        "symmetric": {"type": "boolean", "default": False},
                    },
                    "required": ["shape"],
                },
            },
            {
                "name": "run_corpus",
                "description": "Run the regression corpus of published example games",
                "inputSchema": {"type": "object", "properties": {}},
            },
        ]

    def make_response(
        self,
        request_id: Any,
        result: Optional[dict] = None,
        error: Optional[dict] = None,
    ) -> str:
        """Create JSON-RPC 2.0 response."""
        response = {"jsonrpc": "2.0"}

        if request_id is not None and request_id != "":
            response["id"] = request_id

        if error:
            response["error"] = error
        elif result is not None:
            response["result"] = result

        return json.dumps(response)

    def handle_initialize(self, request_id: Any) -> str:
        """Handle initialize request."""
        return self.make_response(
            request_id,
            result={
                "protocolVersion": "2024-11-05",
                "capabilities": {"tools": {}},
                "serverInfo": {"name": "pte-toolkit", "version": __version__},
            },
        )

    def handle_tools_list(self, request_id: Any) -> str:
        """Handle tools/list request."""
        return self.make_response(request_id, result={"tools": self.get_tools()})

    def handle_tools_call(self, request_id: Any, tool_name: str, arguments: dict) -> str:
        """Handle tools/call request."""
        try:
            result_data = self._dispatch_tool(tool_name, arguments)
            return self.make_response(
                request_id,
                result={"content": [{"type": "text", "text": json.dumps(result_data, indent=2)}]},
            )
        except Exception as e:
            logger.error(f"Error calling tool {tool_name}: {e}")
            return self.make_response(
                request_id,
                error={
                    "code": -32603,
                    "message": f"Internal error: {str(e)}",
                    "data": {"type": type(e).__name__},
                },
            )

    def _game(self, arguments: dict) -> Game:
        game = parse_game(arguments.get("game", ""))
        ties = arguments.get("break_ties")
        if ties is None or ties is False:
            return game
        return break_ties(game, None if ties is True else int(ties))

    def _newcomb(self, arguments: dict) -> Any:
        problem = canonical_problem()
        if arguments.get("payoffs"):
            problem = NewcombProblem(*arguments["payoffs"])
        if arguments.get("prior") is not None:
            problem = problem.with_parameter(Theory.CDT, arguments["prior"])
        if arguments.get("accuracy") is not None:
            problem = problem.with_parameter(Theory.EDT, arguments["accuracy"])
        theory = Theory(arguments.get("theory", ""))
        if arguments.get("sweep") is not None:
            return [v.to_dict() for v in recommendation_sweep(problem, theory, arguments["sweep"])]
        return expected_utilities(problem, theory).to_dict()

    def _dispatch_tool(self, tool_name: str, arguments: dict) -> Any:
        """Dispatch tool call to appropriate handler."""
        if tool_name == "solve_game":
            game = self._game(arguments)
            concept = arguments.get("concept", "pte")
            lenient = arguments.get("lenient", False)
            if concept == "all":
                return solve_all(game, lenient=lenient)
            return solve_concept(game, concept, lenient=lenient)
        elif tool_name == "classify_game":
            game = self._game(arguments)
            report = classify(game, lenient=arguments.get("lenient", False))
            return game_record(report, include_trace=arguments.get("include_trace", True))
        elif tool_name == "verify_game":
            violations = verify_inclusions(
                self._game(arguments), lenient=arguments.get("lenient", False)
            )
            return {"violations": [v.to_dict() for v in violations]}
        elif tool_name == "newcomb_verdict":
            return self._newcomb(arguments)
        elif tool_name == "sample_game":
            index = arguments.get("index", 0)
            config = SampleConfig(
                shape=tuple(arguments.get("shape", ())),
                count=index + 1,
                seed=arguments.get("seed", 0),
                symmetric=arguments.get("symmetric", False),
            )
            return {"index": index, "game": serialize_game(sample_game(config, index))}
        elif tool_name == "run_corpus":
            return [outcome.to_dict() for outcome in run_corpus(self.corpus_path)]
        else:
            raise ValueError(f"Unknown tool: {tool_name}")

    def process_request(self, request: Any) -> Optional[str]:
        """Process a JSON-RPC request."""
        if not isinstance(request, dict):
            logger.error(f"Invalid request: {request!r}")
            return self.make_response(
                None, error={"code": -32600, "message": "Invalid Request"}
            )
        request_id = request.get("id")
        method = request.get("method")
        params = request.get("params") or {}
        if not isinstance(params, dict):
            return self.make_response(
                request_id, error={"code": -32600, "message": "Invalid Request: params"}
            )

        logger.debug(f"Processing: method={method}, id={request_id}")

        # Notifications (no response)
        if request_id is None:
            if method == "notifications/initialized":
                logger.debug("Received initialized notification")
            return None

        if method == "initialize":
            return self.handle_initialize(request_id)
        elif method == "tools/list":
            return self.handle_tools_list(request_id)
        elif method == "tools/call":
            return self.handle_tools_call(
                request_id, params.get("name"), params.get("arguments") or {}
            )
        else:
            return self.make_response(
                request_id, error={"code": -32601, "message": f"Method not found: {method}"}
            )


def main():
    """Run the tool server over stdio."""
    logging.basicConfig(
        level=os.getenv("LOG_LEVEL", "INFO").upper(),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
    )
    server = PteToolServer()
    logger.info("Starting PTE tool server")

    try:
        while True:
            line = sys.stdin.readline()
            if not line:
                logger.info("EOF, shutting down")
                break

            try:
                request = json.loads(line)
                response = server.process_request(request)
                if response is not None:
                    print(response)
                    sys.stdout.flush()
            except json.JSONDecodeError as e:
                logger.error(f"Invalid JSON: {e}")
                print(json.dumps({
                    "jsonrpc": "2.0",
                    "error": {"code": -32700, "message": "Parse error"},
                }))
                sys.stdout.flush()

    except KeyboardInterrupt:
        logger.info("Shutting down (SIGINT)")
        sys.exit(0)


if __name__ == "__main__":
    main()
