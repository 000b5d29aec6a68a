from flask import Flask, request, jsonify

from src.config import Settings, configure_logging
from src.errors import CollatzError, http_status_for
from src.eval import eval_fixture
from src.managers.command_manager import FORMATS, CommandManager

settings = Settings.from_env()
configure_logging(settings.log_level)

app = Flask(__name__)
manager = CommandManager(settings)


def _coerce(value):
    # big integers may arrive as decimal strings
    if isinstance(value, str) and value.isdigit():
        return int(value)
    return value


@app.route('/run_command', methods=['POST'])
def run_command_endpoint():
    data = request.get_json(silent=True) or {}
    name = data.get('command')
    params = {k: _coerce(v) for k, v in (data.get('params') or {}).items()}
    fmt = data.get('format', 'json')
    if not name:
        return jsonify({"error": "Missing command"}), 400
    if fmt not in FORMATS:
        return jsonify({"error": f"Unknown format {fmt!r}"}), 400
    if name not in manager.list_actions():
        return jsonify({"error": f"Unknown command {name!r}"}), 400

    try:
        result = manager.run(name, **params)
        if fmt == 'json':
            return jsonify({"command": name, "result": manager.to_jsonable(name, result)}), 200
        return jsonify({"command": name, "output": manager.render(name, result, fmt, **params)}), 200
    except CollatzError as e:
        return jsonify({"error": str(e)}), http_status_for(e)
    except TypeError as e:
        # unexpected or missing params for the command's run()
        return jsonify({"error": str(e)}), 400


@app.route('/run_batch', methods=['POST'])
def run_batch_endpoint():
    data = request.get_json(silent=True) or {}
    commands = data.get('commands')
    if not isinstance(commands, list) or not commands or not all(isinstance(c, dict) for c in commands):
        return jsonify({"error": "Missing commands: expected a list of {action, params} objects"}), 400

    commands = [
        {"action": c.get('action'), "params": {k: _coerce(v) for k, v in (c.get('params') or {}).items()}}
        for c in commands
    ]
    results = manager.execute(commands)
    payload = [
        None if result is None else manager.to_jsonable(command["action"], result)
        for command, result in zip(commands, results)
    ]
    return jsonify({"results": payload}), 200


@app.route("/eval_fixture", methods=["POST"])
def eval_fixture_endpoint():
    data = request.get_json(silent=True) or {}
    required = [
        "name"
    ]
    missing = [k for k in required if not data.get(k)]
    if missing:
        return jsonify({"error": f"Missing fields: {', '.join(missing)}"}), 400

    try:
        result = eval_fixture(data["name"], settings)
        return jsonify(result), 200
    except CollatzError as e:
        return jsonify({"error": str(e)}), http_status_for(e)
    except Exception as e:
        return jsonify({"error": str(e)}), 500


@app.route('/commands', methods=['GET'])
def commands_endpoint():
    return jsonify({"commands": manager.describe()}), 200


@app.route('/health', methods=['GET'])
def health_check():
    return jsonify({"status": "healthy"}), 200


if __name__ == "__main__":
    app.run(debug=True, port=5001)
