# Utils: serialização, CSV e texto
