"""
Main entry point for ellipsum
With arguments it runs the command line; otherwise it serves the report service
"""

import os
import sys

from web.app import app

application = app

if __name__ == "__main__":
    if len(sys.argv) > 1:
        from src.cli import main
        sys.exit(main(sys.argv[1:]))

    import uvicorn
    port = int(os.environ.get("PORT", 8000))
    uvicorn.run(application, host="0.0.0.0", port=port)
