"""
Human-readable formatting for report output.
"""


def format_size(size_bytes: float) -> str:
    """
    Format a byte count with binary units.

    Whole values print without decimals so footprints read as "16 MB" and "32 KB".

    Args:
        size_bytes: Size in bytes

    Returns:
        Formatted string (e.g., "1.5 MB")
    """
    for unit in ["B", "KB", "MB", "GB", "TB"]:
        if size_bytes < 1024.0:
            return f"{size_bytes:.0f} {unit}" if float(size_bytes).is_integer() else f"{size_bytes:.1f} {unit}"
        size_bytes /= 1024.0
    return f"{size_bytes:.1f} PB"


def format_percent(fraction: float) -> str:
    return f"{100.0 * fraction:.1f}%"
