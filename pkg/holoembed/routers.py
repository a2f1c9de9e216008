"""
Command Router Configuration

Aggregates the command routers of every package into the router main.py
installs as argparse subcommands.
"""

from holoembed.biortho.controller import router as biortho_router
from holoembed.contrib.routing import CommandRouter
from holoembed.embedding.controller import router as embedding_router
from holoembed.verification.controller import router as verification_router

cli_router = CommandRouter()

cli_router.include_router(biortho_router)
cli_router.include_router(embedding_router)
cli_router.include_router(verification_router)
