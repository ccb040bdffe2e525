"""settings: view or edit the machine-local run settings."""
import argparse

import app
from commands.command_enums import ExitCode, HelpSection
from commands.registry import registry, CommandArgument, ValidationError
from model.settings import RunSettings, SettingsValueError


@registry.command(
    name="settings",
    arguments=[
        CommandArgument("key", optional=True, help="Setting to show or change"),
        CommandArgument("value", optional=True, help="New value; an empty string clears the setting"),
    ],
    description="Show all settings, show one, or set one (max_threads, output_root)",
    help_sections=[HelpSection.CONFIGURE]
)
def settings_command(args: argparse.Namespace) -> int:
    settings = RunSettings.load()
    if args.key is not None and args.key not in RunSettings.KEYS:
        raise ValidationError(f"Unknown setting {args.key!r}; known settings: {', '.join(RunSettings.KEYS)}")
    if args.key is None:
        print(f"Settings file: {settings.filename}")
        for key, value in settings.as_dict().items():
            print(f"  {key} = {value if value is not None else '(unset)'}")
        return ExitCode.OK
    if args.value is None:
        value = settings.as_dict()[args.key]
        print(f"{args.key} = {value if value is not None else '(unset)'}")
        return ExitCode.OK
    try:
        settings.set_value(args.key, args.value).save()
    except SettingsValueError as e:
        raise ValidationError(str(e))
    app.forget_saved_settings()
    app.logger.info(f"Setting {args.key} changed to {args.value!r} in {settings.filename}")
    print(f"{args.key} = {settings.as_dict()[args.key]}")
    return ExitCode.OK
