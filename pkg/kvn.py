import sys

import app
from commands.loader import load_all_commands
from commands.registry import registry


class KvnApp:
    @staticmethod
    def run(argv: list[str] | None = None) -> int:
        load_all_commands()
        registry.log_registered_commands(app.logger)
        try:
            return registry.handle_command(sys.argv[1:] if argv is None else argv)
        except KeyboardInterrupt:
            app.logger.warning("Interrupted")
            print("interrupted; rerun simulate with --resume to continue from the last checkpoint")
            return 130


if __name__ == "__main__":
    sys.exit(KvnApp.run())
