#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "autoqml/errors.hpp"
#include "autoqml/rng.hpp"

namespace autoqml {

constexpr double kLeakySlope = 0.2;
constexpr double kProbClamp = 1e-12;

// Hyperparameters for one discriminator variant. The two named types fix the
// hidden widths; lr/betas come from the config's hparams block.
struct DiscriminatorSpec {
  std::string type_name;
  std::vector<int> hidden;
  double lr = 1e-4;
  double beta1 = 0.9;
  double beta2 = 0.999;
};

inline std::vector<int> discriminator_hidden_sizes(const std::string& type_name) {
  if (type_name == "custom_classical_1") return {20};
  if (type_name == "custom_classical_2") return {40, 10};
  throw InvalidValue("unknown discriminator type: " + type_name);
}

inline void validate_betas(double b1, double b2) {
  if (!(0.0 < b1 && b1 < b2 && b2 < 1.0))
    throw InvalidValue("adam betas must satisfy 0 < beta1 < beta2 < 1");
}

inline DiscriminatorSpec make_discriminator_spec(const std::string& type_name,
                                                 double lr, double beta1,
                                                 double beta2) {
  validate_betas(beta1, beta2);
  if (lr <= 0.0) throw InvalidValue("discriminator lr must be positive");
  return {type_name, discriminator_hidden_sizes(type_name), lr, beta1, beta2};
}

// Scalar-input MLP 1 -> hidden... -> 1 with LeakyReLU(0.2) on hidden layers
// and a sigmoid head. W[l] is row-major with shape sizes[l+1] x sizes[l].
struct DiscriminatorNet {
  std::vector<int> sizes;
  std::vector<std::vector<double>> W;
  std::vector<std::vector<double>> b;

  std::size_t num_params() const {
    std::size_t n = 0;
    for (std::size_t l = 0; l + 1 < sizes.size(); ++l)
      n += static_cast<std::size_t>(sizes[l + 1]) * sizes[l] + sizes[l + 1];
    return n;
  }
};

inline DiscriminatorNet init_discriminator(const std::vector<int>& hidden,
                                           Rng& rng) {
  DiscriminatorNet net;
  net.sizes.push_back(1);
  for (int h : hidden) {
    if (h < 1) throw InvalidValue("hidden layer width must be >= 1");
    net.sizes.push_back(h);
  }
  net.sizes.push_back(1);
  for (std::size_t l = 0; l + 1 < net.sizes.size(); ++l) {
    const int fan_in = net.sizes[l];
    const int fan_out = net.sizes[l + 1];
    const double lim = std::sqrt(6.0 / (fan_in + fan_out));
    std::vector<double> w(static_cast<std::size_t>(fan_out) * fan_in);
    for (auto& x : w) x = rng.uniform(-lim, lim);
    net.W.push_back(std::move(w));
    net.b.emplace_back(fan_out, 0.0);
  }
  return net;
}

inline DiscriminatorNet init_discriminator(const DiscriminatorSpec& spec,
                                           Rng& rng) {
  return init_discriminator(spec.hidden, rng);
}

inline double sigmoid(double z) { return 1.0 / (1.0 + std::exp(-z)); }

// Batched forward pass that keeps per-layer post-activation values (what
// backward needs). acts[0] is the input row; acts.back() holds the
// pre-sigmoid outputs. Activations are row-major (units x batch).
struct DiscForward {
  std::vector<std::vector<double>> acts;
  std::vector<double> probs;
};

inline DiscForward disc_forward_batch(const DiscriminatorNet& net,
                                      const std::vector<double>& xs) {
  for (double x : xs)
    if (!std::isfinite(x)) throw NonFiniteInput("discriminator input not finite");
  DiscForward f;
  f.acts.push_back(xs);
  const std::size_t nlayers = net.W.size();
  const std::size_t m = xs.size();
  for (std::size_t l = 0; l < nlayers; ++l) {
    const auto& a = f.acts.back();
    const int out = net.sizes[l + 1];
    const int in = net.sizes[l];
    std::vector<double> z(static_cast<std::size_t>(out) * m);
    for (int r = 0; r < out; ++r) {
      for (std::size_t c = 0; c < m; ++c) {
        double acc = net.b[l][r];
        for (int k = 0; k < in; ++k)
          acc += net.W[l][static_cast<std::size_t>(r) * in + k] * a[k * m + c];
        if (l + 1 < nlayers && acc <= 0.0) acc *= kLeakySlope;
        z[static_cast<std::size_t>(r) * m + c] = acc;
      }
    }
    f.acts.push_back(std::move(z));
  }
  f.probs.resize(m);
  const auto& zout = f.acts.back();
  for (std::size_t c = 0; c < m; ++c) f.probs[c] = sigmoid(zout[c]);
  return f;
}

inline double disc_forward(const DiscriminatorNet& net, double sample_value) {
  return disc_forward_batch(net, {sample_value}).probs[0];
}

struct GanLosses {
  double d_loss;
  double g_loss;
};

// Non-saturating BCE losses from discriminator outputs on a real and a fake
// batch; probabilities clamped to [1e-12, 1-1e-12] before the logs.
inline GanLosses gan_losses(const std::vector<double>& disc_probs_real,
                            const std::vector<double>& disc_probs_fake) {
  if (disc_probs_real.empty() || disc_probs_fake.empty())
    throw EmptySample("gan_losses needs non-empty batches");
  auto clamp = [](double p) {
    return std::clamp(p, kProbClamp, 1.0 - kProbClamp);
  };
  double ld = 0.0;
  for (double p : disc_probs_real) ld -= std::log(clamp(p));
  ld /= static_cast<double>(disc_probs_real.size());
  double lf = 0.0, lg = 0.0;
  for (double p : disc_probs_fake) {
    lf -= std::log(1.0 - clamp(p));
    lg -= std::log(clamp(p));
  }
  ld += lf / static_cast<double>(disc_probs_fake.size());
  lg /= static_cast<double>(disc_probs_fake.size());
  return {ld, lg};
}

// Exact gradient of L_D with respect to every weight and bias, plus L_D
// itself at the pre-update parameters. Gradient tensors mirror W/b shapes.
struct DiscGradients {
  std::vector<std::vector<double>> gW;
  std::vector<std::vector<double>> gb;
  double d_loss;
};

inline DiscGradients disc_backward(const DiscriminatorNet& net,
                                   const std::vector<double>& real_batch,
                                   const std::vector<double>& fake_batch) {
  if (real_batch.empty() || fake_batch.empty())
    throw EmptySample("disc_backward needs non-empty batches");
  DiscGradients g;
  for (const auto& w : net.W) g.gW.emplace_back(w.size(), 0.0);
  for (const auto& bb : net.b) g.gb.emplace_back(bb.size(), 0.0);

  const std::size_t nlayers = net.W.size();
  std::vector<double> probs_real, probs_fake;
  for (int pass = 0; pass < 2; ++pass) {
    const bool is_real = pass == 0;
    const auto& batch = is_real ? real_batch : fake_batch;
    const std::size_t m = batch.size();
    DiscForward f = disc_forward_batch(net, batch);
    (is_real ? probs_real : probs_fake) = f.probs;

    // dL_D/dz at the output: (p-1)/m on reals, p/m on fakes.
    std::vector<double> d(m);
    for (std::size_t c = 0; c < m; ++c)
      d[c] = ((is_real ? f.probs[c] - 1.0 : f.probs[c])) / static_cast<double>(m);

    for (std::size_t l = nlayers; l-- > 0;) {
      const int out = net.sizes[l + 1];
      const int in = net.sizes[l];
      const auto& a = f.acts[l];
      for (int r = 0; r < out; ++r) {
        double bsum = 0.0;
        for (std::size_t c = 0; c < m; ++c) {
          const double dv = d[static_cast<std::size_t>(r) * m + c];
          bsum += dv;
          for (int k = 0; k < in; ++k)
            g.gW[l][static_cast<std::size_t>(r) * in + k] += dv * a[k * m + c];
        }
        g.gb[l][r] += bsum;
      }
      if (l > 0) {
        std::vector<double> dn(static_cast<std::size_t>(in) * m, 0.0);
        for (int k = 0; k < in; ++k)
          for (std::size_t c = 0; c < m; ++c) {
            double acc = 0.0;
            for (int r = 0; r < out; ++r)
              acc += net.W[l][static_cast<std::size_t>(r) * in + k] *
                     d[static_cast<std::size_t>(r) * m + c];
            dn[static_cast<std::size_t>(k) * m + c] =
                acc * (a[static_cast<std::size_t>(k) * m + c] > 0.0 ? 1.0
                                                                    : kLeakySlope);
          }
        d = std::move(dn);
      }
    }
  }
  g.d_loss = gan_losses(probs_real, probs_fake).d_loss;
  return g;
}

// Flat views over net parameters and gradients in W0,W1,...,b0,b1,... order,
// for Adam updates and finite-difference checks.
inline std::vector<double> disc_pack(const DiscriminatorNet& net) {
  std::vector<double> flat;
  flat.reserve(net.num_params());
  for (const auto& w : net.W) flat.insert(flat.end(), w.begin(), w.end());
  for (const auto& bb : net.b) flat.insert(flat.end(), bb.begin(), bb.end());
  return flat;
}

inline void disc_unpack(DiscriminatorNet& net, const std::vector<double>& flat) {
  if (flat.size() != net.num_params())
    throw LengthMismatch("disc_unpack: flat vector length mismatch");
  std::size_t i = 0;
  for (auto& w : net.W)
    for (auto& x : w) x = flat[i++];
  for (auto& bb : net.b)
    for (auto& x : bb) x = flat[i++];
}

inline std::vector<double> pack_disc_gradients(const DiscGradients& g) {
  std::vector<double> flat;
  for (const auto& w : g.gW) flat.insert(flat.end(), w.begin(), w.end());
  for (const auto& bb : g.gb) flat.insert(flat.end(), bb.begin(), bb.end());
  return flat;
}

}  // namespace autoqml
