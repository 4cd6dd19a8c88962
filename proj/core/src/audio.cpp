// SPDX-License-Identifier: Apache-2.0
#include "netaural/audio.hpp"

#include <fftw3.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <complex>
#include <memory>
#include <numbers>

namespace netaural {

AudioClip::AudioClip(std::vector<std::int16_t> samples, std::uint32_t sample_rate)
    : samples_(std::move(samples)), sample_rate_(sample_rate) {
    if (samples_.empty()) {
        throw std::invalid_argument("audio clip must contain at least one sample");
    }
    if (sample_rate_ == 0) {
        throw std::invalid_argument("sample rate must be positive");
    }
}

AudioClip waveform_to_clip(std::span<const double> column, std::uint32_t sample_rate, double peak) {
    if (!(peak > 0.0 && peak <= 1.0)) {
        throw std::invalid_argument("peak must lie in (0, 1]");
    }
    double max_abs = 0.0;
    for (double x : column) {
        max_abs = std::max(max_abs, std::abs(x));
    }
    const double scale = max_abs > 0.0 ? peak / max_abs : 0.0;
    std::vector<std::int16_t> samples(column.size());
    std::transform(column.begin(), column.end(), samples.begin(), [scale](double x) {
        return static_cast<std::int16_t>(std::lround(scale * x * 32767.0));
    });
    return AudioClip(std::move(samples), sample_rate);
}

std::vector<std::uint8_t> write_wav(const AudioClip& clip) {
    const auto data_bytes = static_cast<std::uint32_t>(clip.samples().size() * 2);
    std::vector<std::uint8_t> out;
    out.reserve(44 + data_bytes);
    out.insert(out.end(), {'R', 'I', 'F', 'F'});
    detail::put_le<std::uint32_t>(out, 36 + data_bytes);
    out.insert(out.end(), {'W', 'A', 'V', 'E', 'f', 'm', 't', ' '});
    detail::put_le<std::uint32_t>(out, 16);                       // fmt chunk size
    detail::put_le<std::uint16_t>(out, 1);                        // PCM
    detail::put_le<std::uint16_t>(out, 1);                        // mono
    detail::put_le<std::uint32_t>(out, clip.sample_rate());
    detail::put_le<std::uint32_t>(out, clip.sample_rate() * 2);   // byte rate
    detail::put_le<std::uint16_t>(out, 2);                        // block align
    detail::put_le<std::uint16_t>(out, 16);                       // bits per sample
    out.insert(out.end(), {'d', 'a', 't', 'a'});
    detail::put_le<std::uint32_t>(out, data_bytes);
    for (auto s : clip.samples()) {
        detail::put_le(out, s);
    }
    return out;
}

AudioClip parse_wav(std::span<const std::uint8_t> bytes) {
    detail::ByteReader in(bytes);
    const auto expect = [](bool ok, const char* what) {
        if (!ok) throw FormatError(std::string("wav: ") + what);
    };
    expect(in.get_string(4) == "RIFF", "missing RIFF tag");
    const auto riff_size = in.get<std::uint32_t>();
    expect(riff_size + 8ULL == bytes.size(), "RIFF size does not match file size");
    expect(in.get_string(4) == "WAVE", "missing WAVE tag");
    expect(in.get_string(4) == "fmt ", "missing fmt chunk");
    expect(in.get<std::uint32_t>() == 16, "unexpected fmt chunk size");
    expect(in.get<std::uint16_t>() == 1, "not PCM");
    expect(in.get<std::uint16_t>() == 1, "not mono");
    const auto rate = in.get<std::uint32_t>();
    expect(in.get<std::uint32_t>() == rate * 2, "inconsistent byte rate");
    expect(in.get<std::uint16_t>() == 2, "inconsistent block align");
    expect(in.get<std::uint16_t>() == 16, "not 16-bit");
    expect(in.get_string(4) == "data", "missing data chunk");
    const auto data_bytes = in.get<std::uint32_t>();
    expect(data_bytes % 2 == 0 && data_bytes == in.remaining(), "data size mismatch");
    std::vector<std::int16_t> samples(data_bytes / 2);
    for (auto& s : samples) {
        s = in.get<std::int16_t>();
    }
    return AudioClip(std::move(samples), rate);
}

AudioClip concat_all_nodes(const WaveformMatrix& w, std::uint32_t sample_rate, double gap_seconds,
                           double peak) {
    const auto gap = static_cast<std::size_t>(std::lround(std::max(0.0, gap_seconds) * sample_rate));
    std::vector<std::int16_t> all;
    all.reserve(w.nodes() * (w.samples() + gap));
    for (std::size_t v = 0; v < w.nodes(); ++v) {
        if (v > 0) {
            all.insert(all.end(), gap, 0);
        }
        const auto clip = waveform_to_clip(w.column(v), sample_rate, peak);
        all.insert(all.end(), clip.samples().begin(), clip.samples().end());
    }
    return AudioClip(std::move(all), sample_rate);
}

namespace {

/// Real-to-complex DFT plan bound to its own buffers.
class RealFft {
public:
    explicit RealFft(std::size_t n)
        : n_(n),
          in_(static_cast<double*>(fftw_malloc(sizeof(double) * n))),
          out_(static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * (n / 2 + 1)))) {
        plan_ = fftw_plan_dft_r2c_1d(static_cast<int>(n), in_.get(), out_.get(), FFTW_ESTIMATE);
    }
    ~RealFft() { fftw_destroy_plan(plan_); }
    RealFft(const RealFft&) = delete;
    RealFft& operator=(const RealFft&) = delete;

    std::span<double> input() { return {in_.get(), n_}; }

    /// Executes and writes |X_k| for k = 0..n/2.
    void magnitudes(std::span<double> out) {
        fftw_execute(plan_);
        for (std::size_t k = 0; k <= n_ / 2; ++k) {
            out[k] = std::hypot(out_.get()[k][0], out_.get()[k][1]);
        }
    }

private:
    struct Free {
        void operator()(void* p) const { fftw_free(p); }
    };
    std::size_t n_;
    std::unique_ptr<double, Free> in_;
    std::unique_ptr<fftw_complex, Free> out_;
    fftw_plan plan_;
};

} // namespace

std::vector<double> spectrum(std::span<const double> column) {
    if (column.empty()) {
        throw std::invalid_argument("spectrum of an empty column");
    }
    RealFft fft(column.size());
    std::copy(column.begin(), column.end(), fft.input().begin());
    std::vector<double> mags(column.size() / 2 + 1);
    fft.magnitudes(mags);
    return mags;
}

Spectrogram spectrogram(std::span<const double> column, std::size_t window, std::size_t hop) {
    if (window < 2 || hop == 0) {
        throw std::invalid_argument("spectrogram: window must be >= 2 and hop >= 1");
    }
    if (column.size() < window) {
        throw std::invalid_argument("spectrogram: column shorter than window");
    }
    Spectrogram s;
    s.frames = 1 + (column.size() - window) / hop;
    s.bins = window / 2 + 1;
    s.magnitude.resize(s.frames * s.bins);

    // Periodic Hann window.
    std::vector<double> hann(window);
    for (std::size_t i = 0; i < window; ++i) {
        hann[i] = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * static_cast<double>(i) /
                                       static_cast<double>(window));
    }
    RealFft fft(window);
    for (std::size_t f = 0; f < s.frames; ++f) {
        auto in = fft.input();
        for (std::size_t i = 0; i < window; ++i) {
            in[i] = column[f * hop + i] * hann[i];
        }
        fft.magnitudes(std::span<double>(s.magnitude).subspan(f * s.bins, s.bins));
    }
    return s;
}

namespace {

void append_double(std::string& out, double x) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    out.append(buf, res.ptr);
}

} // namespace

std::string spectra_csv(const WaveformMatrix& w, std::uint32_t sample_rate) {
    std::vector<std::vector<double>> mags;
    for (std::size_t v = 0; v < w.nodes(); ++v) {
        mags.push_back(spectrum(w.column(v)));
    }
    std::string out = "bin,frequency_hz";
    for (std::size_t v = 0; v < w.nodes(); ++v) {
        out += ",node_" + std::to_string(v);
    }
    out += '\n';
    const std::size_t bins = w.samples() / 2 + 1;
    for (std::size_t k = 0; k < bins; ++k) {
        out += std::to_string(k);
        out += ',';
        append_double(out, static_cast<double>(k) * sample_rate / static_cast<double>(w.samples()));
        for (const auto& m : mags) {
            out += ',';
            append_double(out, m[k]);
        }
        out += '\n';
    }
    return out;
}

std::string spectrogram_csv(const Spectrogram& s, std::size_t hop, std::uint32_t sample_rate) {
    std::string out = "frame,time_s";
    for (std::size_t b = 0; b < s.bins; ++b) {
        out += ",bin_" + std::to_string(b);
    }
    out += '\n';
    for (std::size_t f = 0; f < s.frames; ++f) {
        out += std::to_string(f);
        out += ',';
        append_double(out, static_cast<double>(f * hop) / sample_rate);
        for (std::size_t b = 0; b < s.bins; ++b) {
            out += ',';
            append_double(out, s.at(f, b));
        }
        out += '\n';
    }
    return out;
}

} // namespace netaural
