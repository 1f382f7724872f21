"""Regenerates the synthetic tone clips in audio/."""
import math
import pathlib
import struct
import wave

RATE = 16000
WORDS = {"der": 220, "die": 247, "hund": 262, "katze": 294, "bellt": 330, "schläft": 349}

out = pathlib.Path(__file__).parent / "audio"
out.mkdir(exist_ok=True)
for i, (word, freq) in enumerate(sorted(WORDS.items())):
    n = RATE // 4 + i * 400
    frames = b"".join(
        struct.pack("<h", int(8000 * math.sin(2 * math.pi * freq * t / RATE))) for t in range(n)
    )
    with wave.open(str(out / f"{word}.wav"), "wb") as w:
        w.setnchannels(1)
        w.setsampwidth(2)
        w.setframerate(RATE)
        w.writeframes(frames)
